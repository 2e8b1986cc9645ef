//! Shift-bounded words, the `e_i` level of a sequence and its minimal
//! prefix.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::word::{compare, compare_words, EPWord, Seq, Word};

use super::maps::{d_prefix, e_map, e_threshold, g_map, MAX_LEVEL};

/// `s' > σⁿ(s) > s` for `0 < n < |s|`, comparing trailing-zero
/// embeddings. `1` is shift-bounded and `0` is not.
pub fn is_shift_bounded(s: &Word) -> Result<bool> {
    if s.is_empty() {
        return domain("shift-boundedness of the empty word");
    }
    if !s.contains_one() {
        return Ok(false);
    }
    let upper = s.prime()?;
    for n in 1..s.len() {
        let tail = s.shift(n)?;
        if compare_words(&upper, &tail) != Ordering::Greater
            || compare_words(&tail, s) != Ordering::Greater
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which band `e_{i-1} ≤ c < e_i` a sequence falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LevelClass {
    Level(u32),
    /// `c ≥ d(1)`, the shifted inverse Thue–Morse word.
    AboveAll,
}

impl LevelClass {
    pub fn level(self) -> Option<u32> {
        match self {
            LevelClass::Level(i) => Some(i),
            LevelClass::AboveAll => None,
        }
    }
}

impl fmt::Display for LevelClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelClass::Level(i) => write!(f, "{i}"),
            LevelClass::AboveAll => f.write_str("above-all"),
        }
    }
}

/// Longest `d(1)` prefix consulted before giving up on deciding `c` vs `d(1)`.
pub const D_PREFIX_CAP: usize = 4096;

/// Order of `c` against the (non-periodic) word `d(1)`.
pub fn compare_with_threshold(c: &Seq) -> Result<Ordering> {
    let mut m = 64;
    loop {
        let d = d_prefix(&Word::from_bits([1]), m)?;
        if let Some(i) = (0..m).find(|&i| c.at(i) != d.bit(i)) {
            return Ok(c.at(i).cmp(&d.bit(i)));
        }
        if m >= D_PREFIX_CAP {
            return Err(Error::Resource(format!(
                "{c} agrees with d(1) on its first {m} symbols"
            )));
        }
        m = (m * 2).min(D_PREFIX_CAP);
    }
}

/// The unique `i` with `e_{i-1} ≤ c < e_i`, or `AboveAll` when `c ≥ d(1)`.
pub fn level_of(c: &Seq) -> Result<LevelClass> {
    if !c.contains_one() {
        return domain(format!("{c} has no symbol 1"));
    }
    if compare_with_threshold(c)? != Ordering::Less {
        return Ok(LevelClass::AboveAll);
    }
    let ce = c.to_ep();
    for i in 1..=MAX_LEVEL {
        if compare(&ce, &e_threshold(i)?) == Ordering::Less {
            return Ok(LevelClass::Level(i as u32));
        }
    }
    Err(Error::Resource(format!("{c} lies above e_{MAX_LEVEL}")))
}

/// Outcome of the minimal-prefix search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityReport {
    pub level: u32,
    /// Least admissible `n`, `None` if nothing was found up to `searched_up_to`.
    pub m: Option<usize>,
    /// `g_m(s)` when `m` was found.
    pub prefix: Option<Word>,
    pub searched_up_to: usize,
}

impl MinimalityReport {
    pub fn found(&self) -> bool {
        self.m.is_some()
    }
}

/// Default search limit for eventually periodic inputs.
pub const DEFAULT_SEARCH_LIMIT: usize = 1 << 14;

/// `m_s = inf{n ≥ 2^i : e(g_n(s)) ≤ s ≤ g_n(s)^∞}`.
///
/// Finite words are scanned up to their length. Eventually periodic words
/// are scanned up to `|pre| + 2|per| + 2^i` (capped by `search_limit`);
/// the sandwich conditions are periodic in `n` past the preperiod, so two
/// full periods without a hit means there is none.
pub fn minimal_prefix(s: &Seq, search_limit: usize) -> Result<MinimalityReport> {
    let level = match level_of(s)? {
        LevelClass::Level(i) => i,
        LevelClass::AboveAll => {
            return domain(format!("{s} lies above d(1); it has no e_i level"))
        }
    };
    let start = 1usize << level;
    let end = match s {
        Seq::Finite(w) => w.len(),
        Seq::Periodic(e) => {
            (e.preperiod().len() + 2 * e.period().len() + start).min(search_limit)
        }
    };
    let se = s.to_ep();
    for n in start..=end {
        let g = g_map(s, n)?;
        if compare(&e_map(&g)?, &se) != Ordering::Greater
            && compare(&se, &EPWord::periodic(&g)?) != Ordering::Greater
        {
            return Ok(MinimalityReport {
                level,
                m: Some(n),
                prefix: Some(g),
                searched_up_to: n,
            });
        }
    }
    Ok(MinimalityReport {
        level,
        m: None,
        prefix: None,
        searched_up_to: end,
    })
}

/// `s` is its own minimal prefix.
pub fn is_minimal(s: &Word) -> Result<bool> {
    let report = minimal_prefix(&Seq::Finite(s.clone()), s.len())?;
    Ok(report.m == Some(s.len()) && s.ends_with_one())
}

/// Like [`is_minimal`] but `false` instead of an error for words without a
/// level (all zeros, or above `d(1)`).
pub fn is_minimal_word(s: &Word) -> bool {
    s.contains_one()
        && matches!(level_of(&Seq::Finite(s.clone())), Ok(LevelClass::Level(_)))
        && is_minimal(s).unwrap_or(false)
}
