//! Exact binary words: finite words, eventually periodic infinite words and
//! their rational values, with the lexicographic order on infinite
//! expansions.
//!
//! A finite word always stands for its trailing-zero embedding `w 0^∞`
//! whenever it is compared with anything.

mod finite;
mod fraction;
mod periodic;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

pub use finite::{w, Word, MAX_WORD_LEN};
pub use fraction::{frac, from_fraction, to_fraction, word_to_fraction, Fraction};
pub use periodic::{ep, EPWord};

use crate::error::{Error, Result};

/// Lexicographic order of the infinite expansions of `a` and `b`.
///
/// Walks both words in lock-step; once both are inside their periods the
/// pair of period offsets recurs after `lcm(|per_a|, |per_b|)` steps, at
/// which point the words are equal. The two expansions of a dyadic
/// rational (`u 1 0^∞` and `u 0 1^∞`) compare equal.
pub fn compare(a: &EPWord, b: &EPWord) -> Ordering {
    let pa = a.period().len() as u64;
    let pb = b.period().len() as u64;
    let start = a.preperiod().len().max(b.preperiod().len()) as u64;
    let horizon = start.saturating_add(pa.lcm(&pb));
    let mut i = 0usize;
    while (i as u64) < horizon {
        let (x, y) = (a.at(i), b.at(i));
        if x != y {
            let (lo, hi) = if x < y { (a, b) } else { (b, a) };
            if lo.tail_is_constant(i + 1, 1) && hi.tail_is_constant(i + 1, 0) {
                return Ordering::Equal;
            }
            return x.cmp(&y);
        }
        i += 1;
    }
    Ordering::Equal
}

/// [`compare`] for finite words under the trailing-zero embedding.
pub fn compare_words(a: &Word, b: &Word) -> Ordering {
    let n = a.len().max(b.len());
    for i in 0..n {
        let x = if i < a.len() { a.bit(i) } else { 0 };
        let y = if i < b.len() { b.bit(i) } else { 0 };
        if x != y {
            // u 1 0^∞ never equals a finite u 0 … with trailing zeros
            return x.cmp(&y);
        }
    }
    Ordering::Equal
}

/// An input sequence: finite (with its exact length) or eventually
/// periodic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Seq {
    Finite(Word),
    Periodic(EPWord),
}

impl Seq {
    pub fn to_ep(&self) -> EPWord {
        match self {
            Seq::Finite(w) => EPWord::from_finite(w),
            Seq::Periodic(e) => e.clone(),
        }
    }

    /// First `n` symbols (finite words are padded with zeros).
    pub fn prefix(&self, n: usize) -> Word {
        match self {
            Seq::Finite(w) if n <= w.len() => w.prefix(n),
            _ => self.to_ep().prefix(n),
        }
    }

    pub fn at(&self, i: usize) -> u8 {
        match self {
            Seq::Finite(w) => {
                if i < w.len() {
                    w.bit(i)
                } else {
                    0
                }
            }
            Seq::Periodic(e) => e.at(i),
        }
    }

    pub fn contains_one(&self) -> bool {
        match self {
            Seq::Finite(w) => w.contains_one(),
            Seq::Periodic(e) => e.preperiod().contains_one() || e.period().contains_one(),
        }
    }

    pub fn value(&self) -> Fraction {
        to_fraction(&self.to_ep())
    }

    /// Finite words stay finite; periodic words ending in `0^∞` become
    /// finite words.
    pub fn normalized(&self) -> Seq {
        match self {
            Seq::Finite(_) => self.clone(),
            Seq::Periodic(e) => match e.as_finite() {
                Some(w) => Seq::Finite(w),
                None => self.clone(),
            },
        }
    }
}

impl From<Word> for Seq {
    fn from(w: Word) -> Seq {
        Seq::Finite(w)
    }
}

impl From<&Word> for Seq {
    fn from(w: &Word) -> Seq {
        Seq::Finite(w.clone())
    }
}

impl From<EPWord> for Seq {
    fn from(e: EPWord) -> Seq {
        Seq::Periodic(e)
    }
}

impl From<&EPWord> for Seq {
    fn from(e: &EPWord) -> Seq {
        Seq::Periodic(e.clone())
    }
}

impl FromStr for Seq {
    type Err = Error;

    /// `001`, `000(110)` or `3/28`.
    fn from_str(s: &str) -> Result<Seq> {
        let s = s.trim();
        if s.contains('/') {
            let q: Fraction = s.parse()?;
            return Ok(Seq::Periodic(from_fraction(&q)).normalized());
        }
        if s.contains('(') {
            return Ok(Seq::Periodic(s.parse()?));
        }
        if s.is_empty() {
            return Err(Error::Parse("empty input".into()));
        }
        Ok(Seq::Finite(s.parse()?))
    }
}

impl fmt::Display for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Seq::Finite(w) => write!(f, "{w}"),
            Seq::Periodic(e) => write!(f, "{e}"),
        }
    }
}

impl fmt::Debug for Seq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Seq(\"{self}\")")
    }
}
