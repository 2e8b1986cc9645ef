use std::fmt;
use std::str::FromStr;

use super::finite::Word;
use crate::error::{Error, Result};

/// An eventually periodic infinite word `pre · per · per · …`, kept in
/// canonical form: the period is primitive and the preperiod is as short as
/// rotating the period allows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EPWord {
    pre: Word,
    per: Word,
}

impl EPWord {
    pub fn new(pre: Word, per: Word) -> Result<EPWord> {
        if per.is_empty() {
            return Err(Error::Domain("eventually periodic word with empty period".into()));
        }
        Ok(EPWord::canonical(pre, per))
    }

    /// Purely periodic word `w^∞`.
    pub fn periodic(w: &Word) -> Result<EPWord> {
        EPWord::new(Word::new(), w.clone())
    }

    /// A finite word read as a binary expansion: `w 0^∞`.
    pub fn from_finite(w: &Word) -> EPWord {
        EPWord::canonical(w.clone(), Word::zeros(1))
    }

    fn canonical(pre: Word, per: Word) -> EPWord {
        let per = primitive_root(&per);
        let mut pre_len = pre.len();
        let mut rot = 0usize; // right rotations applied to `per`
        let p = per.len();
        while pre_len > 0 && pre.bit(pre_len - 1) == per.bit((p - 1 + p - rot % p) % p) {
            pre_len -= 1;
            rot += 1;
        }
        let r = rot % p;
        let per = if r == 0 {
            per
        } else {
            per.slice(p - r, p).concat(&per.slice(0, p - r))
        };
        EPWord {
            pre: pre.prefix(pre_len),
            per,
        }
    }

    pub fn preperiod(&self) -> &Word {
        &self.pre
    }

    pub fn period(&self) -> &Word {
        &self.per
    }

    /// True when the word is `w 0^∞` for a finite `w`.
    pub fn is_finite(&self) -> bool {
        self.per.len() == 1 && self.per.bit(0) == 0
    }

    /// The finite word `w` with `self = w 0^∞`, trailing zeros removed.
    pub fn as_finite(&self) -> Option<Word> {
        self.is_finite().then(|| self.pre.trim_trailing_zeros())
    }

    #[inline]
    pub fn at(&self, i: usize) -> u8 {
        if i < self.pre.len() {
            self.pre.bit(i)
        } else {
            self.per.bit((i - self.pre.len()) % self.per.len())
        }
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word::from_bits((0..n).map(|i| self.at(i)))
    }

    /// `σⁿ` on the infinite word, re-canonicalized.
    pub fn shift(&self, n: usize) -> EPWord {
        if n <= self.pre.len() {
            return EPWord::canonical(self.pre.shift(n).expect("n within preperiod"), self.per.clone());
        }
        let r = (n - self.pre.len()) % self.per.len();
        let p = self.per.len();
        let per = self.per.slice(r, p).concat(&self.per.slice(0, r));
        EPWord::canonical(Word::new(), per)
    }

    /// True when every symbol from position `from` on equals `b`.
    pub(crate) fn tail_is_constant(&self, from: usize, b: u8) -> bool {
        (from..self.pre.len()).all(|i| self.pre.bit(i) == b) && self.per.iter().all(|x| x == b)
    }
}

/// Shortest `r` with `w = r^k`.
fn primitive_root(w: &Word) -> Word {
    let n = w.len();
    // failure function (KMP)
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w.bit(i) != w.bit(k) {
            k = fail[k - 1];
        }
        if w.bit(i) == w.bit(k) {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        w.prefix(p)
    } else {
        w.clone()
    }
}

impl From<&Word> for EPWord {
    fn from(w: &Word) -> EPWord {
        EPWord::from_finite(w)
    }
}

impl FromStr for EPWord {
    type Err = Error;

    /// Accepts `pre(per)` or a bare finite word.
    fn from_str(s: &str) -> Result<EPWord> {
        match s.find('(') {
            None => Ok(EPWord::from_finite(&s.parse()?)),
            Some(open) => {
                let body = s[open + 1..]
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("missing ')' in {s:?}")))?;
                let pre: Word = s[..open].parse()?;
                let per: Word = body.parse()?;
                if per.is_empty() {
                    return Err(Error::Parse(format!("empty period in {s:?}")));
                }
                EPWord::new(pre, per)
            }
        }
    }
}

impl fmt::Display for EPWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.pre, self.per)
    }
}

impl fmt::Debug for EPWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EPWord(\"{self}\")")
    }
}

/// Shorthand: `ep("000", "110")`. Panics on bad input.
pub fn ep(pre: &str, per: &str) -> EPWord {
    EPWord::new(pre.parse().unwrap(), per.parse().unwrap()).expect("non-empty period")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::finite::w;

    #[test]
    fn canonical_form() {
        assert_eq!(ep("0", "10"), ep("", "01"));
        assert_eq!(ep("", "0101"), ep("", "01"));
        assert_eq!(ep("000", "110").to_string(), "00(011)");
        assert_eq!(ep("0", "0"), ep("", "0"));
        assert_eq!(ep("01", "0").to_string(), "01(0)");
    }

    #[test]
    fn shift_examples() {
        assert_eq!(ep("001", "10").shift(3), ep("", "10"));
        assert_eq!(ep("001", "10").shift(4), ep("", "01"));
        assert_eq!(ep("", "001").shift(1), ep("", "010"));
    }

    #[test]
    fn parse_and_print() {
        let x: EPWord = "000(110)".parse().unwrap();
        assert_eq!(x, ep("000", "110"));
        assert_eq!("0011".parse::<EPWord>().unwrap(), EPWord::from_finite(&w("0011")));
        assert!("0(".parse::<EPWord>().is_err());
        assert!("0()".parse::<EPWord>().is_err());
    }

    #[test]
    fn finite_detection() {
        assert_eq!(ep("0110", "0").as_finite(), Some(w("011")));
        assert_eq!(ep("", "01").as_finite(), None);
    }
}
