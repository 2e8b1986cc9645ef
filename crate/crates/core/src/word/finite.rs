use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Longest finite word accepted by the parser and by the iterated maps.
pub const MAX_WORD_LEN: usize = 1 << 16;

/// A finite binary word. Bits are packed most-significant first into
/// 64-bit limbs; leading zeros are significant, so `001` and `01` differ.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    limbs: Vec<u64>,
    len: usize,
}

impl Word {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(bits: usize) -> Self {
        Word {
            limbs: Vec::with_capacity(bits.div_ceil(64)),
            len: 0,
        }
    }

    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Self {
        let mut w = Word::new();
        for b in bits {
            w.push(b);
        }
        w
    }

    /// The `len` low bits of `code`, most significant first.
    pub fn from_code(code: u64, len: usize) -> Self {
        debug_assert!(len <= 64);
        Word::from_bits((0..len).rev().map(|k| ((code >> k) & 1) as u8))
    }

    /// Inverse of [`Word::from_code`]; `None` past 64 bits.
    pub fn to_code(&self) -> Option<u64> {
        if self.len > 64 {
            return None;
        }
        Some(self.iter().fold(0u64, |acc, b| (acc << 1) | b as u64))
    }

    pub fn zeros(len: usize) -> Self {
        Word {
            limbs: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Symbol at 0-based position `i`.
    #[inline]
    pub fn bit(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        ((self.limbs[i / 64] >> (63 - i % 64)) & 1) as u8
    }

    #[inline]
    fn set(&mut self, i: usize, b: u8) {
        let mask = 1u64 << (63 - i % 64);
        if b == 0 {
            self.limbs[i / 64] &= !mask;
        } else {
            self.limbs[i / 64] |= mask;
        }
    }

    pub fn push(&mut self, b: u8) {
        debug_assert!(b <= 1);
        if self.len.is_multiple_of(64) {
            self.limbs.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, b);
    }

    pub fn extend_from(&mut self, other: &Word) {
        for b in other.iter() {
            self.push(b);
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = Word::with_capacity(self.len + other.len);
        w.extend_from(self);
        w.extend_from(other);
        w
    }

    /// `self` repeated `k` times.
    pub fn repeat(&self, k: usize) -> Word {
        let mut w = Word::with_capacity(self.len * k);
        for _ in 0..k {
            w.extend_from(self);
        }
        w
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u8> + ExactSizeIterator + '_ {
        (0..self.len).map(move |i| self.bit(i))
    }

    /// Symbols `start..end` (0-based, half open).
    pub fn slice(&self, start: usize, end: usize) -> Word {
        debug_assert!(start <= end && end <= self.len);
        Word::from_bits((start..end).map(|i| self.bit(i)))
    }

    pub fn prefix(&self, n: usize) -> Word {
        self.slice(0, n.min(self.len))
    }

    pub fn first(&self) -> Option<u8> {
        (self.len > 0).then(|| self.bit(0))
    }

    pub fn last(&self) -> Option<u8> {
        (self.len > 0).then(|| self.bit(self.len - 1))
    }

    pub fn ends_with_one(&self) -> bool {
        self.last() == Some(1)
    }

    pub fn contains_one(&self) -> bool {
        self.limbs.iter().any(|&l| l != 0)
    }

    pub fn starts_with(&self, other: &Word) -> bool {
        other.len <= self.len && (0..other.len).all(|i| self.bit(i) == other.bit(i))
    }

    pub fn ends_with(&self, other: &Word) -> bool {
        let off = match self.len.checked_sub(other.len) {
            Some(o) => o,
            None => return false,
        };
        (0..other.len).all(|i| self.bit(off + i) == other.bit(i))
    }

    /// Bit-wise complement `w*`.
    pub fn star(&self) -> Word {
        let mut w = self.clone();
        for l in w.limbs.iter_mut() {
            *l = !*l;
        }
        w.clear_tail();
        w
    }

    /// `w'`: the length-|w| word whose value is `1 - value(w)`. Writing
    /// `w = u 1 0^k`, this is `u* 1 0^k`.
    pub fn prime(&self) -> Result<Word> {
        let last_one = match (0..self.len).rev().find(|&i| self.bit(i) == 1) {
            Some(i) => i,
            None => return domain(format!("prime of the zero word {self:?}")),
        };
        let mut w = self.clone();
        for i in 0..last_one {
            w.set(i, 1 - self.bit(i));
        }
        Ok(w)
    }

    /// `w~`: the last symbol flipped.
    pub fn tilde(&self) -> Result<Word> {
        if self.is_empty() {
            return domain("tilde of the empty word");
        }
        let mut w = self.clone();
        let i = self.len - 1;
        w.set(i, 1 - self.bit(i));
        Ok(w)
    }

    /// `σⁿ(w)`: drop the first `n` symbols.
    pub fn shift(&self, n: usize) -> Result<Word> {
        if n > self.len {
            return domain(format!("shift by {n} of a word of length {}", self.len));
        }
        Ok(self.slice(n, self.len))
    }

    /// Trailing zeros removed; same real value.
    pub fn trim_trailing_zeros(&self) -> Word {
        let end = (0..self.len)
            .rev()
            .find(|&i| self.bit(i) == 1)
            .map_or(0, |i| i + 1);
        self.prefix(end)
    }

    fn clear_tail(&mut self) {
        let used = self.len % 64;
        if used != 0 {
            if let Some(l) = self.limbs.last_mut() {
                *l &= !0u64 << (64 - used);
            }
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        if s.len() > MAX_WORD_LEN {
            return Err(Error::Resource(format!(
                "word of length {} exceeds the limit {MAX_WORD_LEN}",
                s.len()
            )));
        }
        let mut w = Word::with_capacity(s.len());
        for ch in s.chars() {
            match ch {
                '0' => w.push(0),
                '1' => w.push(1),
                _ => return Err(Error::Parse(format!("invalid symbol {ch:?} in {s:?}"))),
            }
        }
        Ok(w)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b == 1 { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

/// Shorthand for tests and examples; panics on bad input.
pub fn w(s: &str) -> Word {
    s.parse().expect("valid binary word")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_examples() {
        assert_eq!(w("01").star(), w("10"));
        assert_eq!(w("0011").star(), w("1100"));
        assert_eq!(w("").star(), w(""));
        let long = w(&"01".repeat(70));
        assert_eq!(long.star().star(), long);
    }

    #[test]
    fn prime_examples() {
        assert_eq!(w("1").prime().unwrap(), w("1"));
        assert_eq!(w("01").prime().unwrap(), w("11"));
        assert_eq!(w("0011").prime().unwrap(), w("1101"));
        assert_eq!(w("0100").prime().unwrap(), w("1100"));
        assert!(matches!(w("000").prime(), Err(Error::Domain(_))));
        assert!(matches!(w("").prime(), Err(Error::Domain(_))));
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(w("001").tilde().unwrap(), w("000"));
        assert_eq!(w("0011").tilde().unwrap(), w("0010"));
        assert_eq!(w("0").tilde().unwrap(), w("1"));
        assert!(w("").tilde().is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(w("0011").shift(2).unwrap(), w("11"));
        assert_eq!(w("01").shift(2).unwrap(), w(""));
        assert!(w("01").shift(3).is_err());
    }

    #[test]
    fn leading_zeros_are_significant() {
        assert_ne!(w("001"), w("01"));
        assert_eq!(w("001").len(), 3);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(matches!("012".parse::<Word>(), Err(Error::Parse(_))));
    }

    #[test]
    fn codes_round_trip() {
        assert_eq!(Word::from_code(0b0011, 4), w("0011"));
        assert_eq!(w("000111").to_code(), Some(7));
    }

    #[test]
    fn limb_boundaries() {
        let s = format!("{}1{}", "0".repeat(63), "10".repeat(40));
        let x = w(&s);
        assert_eq!(x.to_string(), s);
        assert_eq!(x.slice(60, 70).to_string(), &s[60..70]);
        assert_eq!(x.trim_trailing_zeros().to_string(), s.trim_end_matches('0'));
    }
}
