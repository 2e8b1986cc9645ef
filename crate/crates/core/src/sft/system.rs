use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::word::Word;

/// Default cap on the window length `|c|`.
pub const DEFAULT_MAX_WINDOW: usize = 24;

/// Hard ceiling regardless of configuration (state codes are `u64`).
const ABSOLUTE_MAX_WINDOW: usize = 40;

/// The window subshift of a word `c`: states are the length-`L` words `w`
/// with `c ≤ w ≤ c*` (`L = |c|`), and `w → w'` whenever `w' = σ(w) b` is
/// again a state.
///
/// For equal-length words the lexicographic order is the integer order of
/// their codes, so the states are exactly the codes in `[code(c),
/// code(c*)]`; state `i` has code `code(c) + i`. Adjacency is computed on
/// demand: every state has at most two successors (append 0 / append 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionSystem {
    word: Word,
    window_len: usize,
    lo: u64,
    hi: u64,
}

/// Rough memory need of the spectral pass over `2^window` states.
fn memory_estimate(window: usize) -> String {
    let mib = 2f64.powi(window.min(2000) as i32) * 40.0 / (1024.0 * 1024.0);
    if mib < 1e6 {
        format!("{mib:.1} MiB")
    } else {
        format!("{mib:.1e} MiB")
    }
}

pub fn build_sft(c: &Word) -> Result<TransitionSystem> {
    build_sft_with(c, DEFAULT_MAX_WINDOW)
}

pub fn build_sft_with(c: &Word, max_window: usize) -> Result<TransitionSystem> {
    let l = c.len();
    if l > max_window.min(ABSOLUTE_MAX_WINDOW) {
        return Err(Error::Resource(format!(
            "window length {l} exceeds the cap {} (up to 2^{l} states, about {} for the spectral pass)",
            max_window.min(ABSOLUTE_MAX_WINDOW),
            memory_estimate(l)
        )));
    }
    if l < 2 || c.first() != Some(0) || !c.ends_with_one() {
        return domain(format!("window word must start with 0, end with 1 and have length >= 2, got {c:?}"));
    }
    let lo = c.to_code().expect("window fits in u64");
    let hi = c.star().to_code().expect("window fits in u64");
    Ok(TransitionSystem {
        word: c.clone(),
        window_len: l,
        lo,
        hi,
    })
}

impl TransitionSystem {
    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn window_len(&self) -> usize {
        self.window_len
    }

    pub fn state_count(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    #[inline]
    pub fn code(&self, i: usize) -> u64 {
        self.lo + i as u64
    }

    pub fn state_word(&self, i: usize) -> Word {
        Word::from_code(self.code(i), self.window_len)
    }

    pub fn states(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.state_count()).map(|i| self.state_word(i))
    }

    #[inline]
    pub fn index_of_code(&self, code: u64) -> Option<usize> {
        (self.lo..=self.hi)
            .contains(&code)
            .then(|| (code - self.lo) as usize)
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        if w.len() != self.window_len {
            return None;
        }
        self.index_of_code(w.to_code()?)
    }

    /// Append-0 and append-1 successors of state `i`.
    #[inline]
    pub fn successor_pair(&self, i: usize) -> [Option<usize>; 2] {
        let mask = (1u64 << self.window_len) - 1;
        let base = (self.code(i) << 1) & mask;
        [self.index_of_code(base), self.index_of_code(base | 1)]
    }

    #[inline]
    pub fn successors(&self, i: usize) -> impl Iterator<Item = usize> {
        self.successor_pair(i).into_iter().flatten()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.state_count()).flat_map(move |i| self.successors(i).map(move |j| (i, j)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// True when every length-`L` factor of `x` is a state.
    pub fn accepts(&self, x: &Word) -> bool {
        if x.len() < self.window_len {
            return false;
        }
        (0..=x.len() - self.window_len)
            .all(|k| self.index_of(&x.slice(k, k + self.window_len)).is_some())
    }

    pub fn export(&self) -> MatrixExport {
        MatrixExport {
            window_len: self.window_len,
            states: self.states().map(|w| w.to_string()).collect(),
            edges: self.edges().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn export_json(&self) -> String {
        serde_json::to_string_pretty(&self.export()).expect("plain data serializes")
    }
}

/// Stable inspection format for a transition system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixExport {
    pub window_len: usize,
    pub states: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}
