//! The block substitution `μ_u`: words built from the blocks
//! `u~, u, u*, u'` under the transition rule
//!
//! ```text
//!          u~  u   u*  u'
//!   u~  [  0   0   1   1 ]
//!   u   [  1   1   0   0 ]
//!   u*  [  0   0   1   1 ]
//!   u'  [  1   1   0   0 ]
//! ```
//!
//! are coded one symbol per block, `(u~, u, u*, u') ↦ (0, 1, 0, 1)`.

use num_integer::Integer;

use crate::error::{domain, Error, Result};
use crate::word::{EPWord, Word};

struct Blocks {
    tilde: Word,
    plain: Word,
    star: Word,
    prime: Word,
}

impl Blocks {
    fn new(u: &Word) -> Result<Blocks> {
        if !u.ends_with_one() {
            return domain(format!("substitution base must end in 1, got {u}"));
        }
        Ok(Blocks {
            tilde: u.tilde()?,
            plain: u.clone(),
            star: u.star(),
            prime: u.prime()?,
        })
    }

    fn symbol(&self, block: &Word) -> Option<u8> {
        if *block == self.tilde || *block == self.star {
            Some(0)
        } else if *block == self.plain || *block == self.prime {
            Some(1)
        } else {
            None
        }
    }

    /// Block that codes `cur` after a block coding `prev`.
    fn expected(&self, prev: u8, cur: u8) -> &Word {
        match (prev, cur) {
            (0, 0) => &self.star,
            (0, _) => &self.prime,
            (_, 0) => &self.tilde,
            _ => &self.plain,
        }
    }
}

/// `μ_u(x)`: one output symbol per `|u|`-block of `x`.
pub fn mu_forward(x: &Word, u: &Word) -> Result<Word> {
    let blocks = Blocks::new(u)?;
    let l = u.len();
    if !x.len().is_multiple_of(l) {
        return Err(Error::Decode(format!(
            "length {} of {x} is not a multiple of |u| = {l}",
            x.len()
        )));
    }
    let mut out = Word::with_capacity(x.len() / l);
    let mut prev: Option<u8> = None;
    for k in 0..x.len() / l {
        let block = x.slice(k * l, (k + 1) * l);
        let sym = blocks.symbol(&block).ok_or_else(|| {
            Error::Decode(format!("block {block} at {} of {x} is not one of u~, u, u*, u' for u = {u}", k * l))
        })?;
        if let Some(p) = prev {
            if block != *blocks.expected(p, sym) {
                return Err(Error::Decode(format!(
                    "forbidden transition into block {block} at {} of {x}",
                    k * l
                )));
            }
        }
        out.push(sym);
        prev = Some(sym);
    }
    Ok(out)
}

/// `μ_u⁻¹(w)`: the first 0 of each run of zeros becomes `u~`, later zeros
/// `u*`; the first 1 of each run of ones becomes `u'`, later ones `u`.
pub fn mu_inverse(w: &Word, u: &Word) -> Result<Word> {
    let blocks = Blocks::new(u)?;
    let mut out = Word::with_capacity(w.len() * u.len());
    let mut prev: Option<u8> = None;
    for b in w.iter() {
        let block = match (prev, b) {
            (Some(p), _) => blocks.expected(p, b),
            (None, 0) => &blocks.tilde,
            (None, _) => &blocks.prime,
        };
        out.extend_from(block);
        prev = Some(b);
    }
    Ok(out)
}

/// `μ_u` on an eventually periodic word. The preperiod is padded to a block
/// boundary and the period unrolled to `lcm(|per|, |u|)`; decoding two
/// copies of the period also checks the wrap-around transition.
pub fn mu_forward_periodic(x: &EPWord, u: &Word) -> Result<EPWord> {
    let l = u.len();
    let pre = x.preperiod().len().div_ceil(l) * l;
    let per = x.period().len().lcm(&l);
    let decoded = mu_forward(&x.prefix(pre + 2 * per), u)?;
    let (a, b) = (pre / l, per / l);
    EPWord::new(decoded.prefix(a), decoded.slice(a, a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{ep, w};

    #[test]
    fn forward_examples() {
        assert_eq!(mu_forward(&w("001011"), &w("01")).unwrap(), w("001"));
        assert_eq!(mu_forward(&w("001"), &w("1")).unwrap(), w("001"));
        assert_eq!(mu_forward(&w("0011"), &w("01")).unwrap(), w("01"));
        // 1011 = u u' is a forbidden transition under u = 01
        assert!(matches!(mu_forward(&w("0111"), &w("01")), Err(Error::Decode(_))));
        assert!(matches!(mu_forward(&w("00101"), &w("01")), Err(Error::Decode(_))));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(mu_inverse(&w("001"), &w("01")).unwrap(), w("001011"));
        assert_eq!(mu_inverse(&w("01"), &w("01")).unwrap(), w("0011"));
        assert_eq!(mu_inverse(&w("001"), &w("1")).unwrap(), w("001"));
    }

    #[test]
    fn periodic_decode() {
        // e_2 decodes to e_1 under u = 01
        assert_eq!(mu_forward_periodic(&ep("0010", "1100"), &w("01")).unwrap(), ep("00", "10"));
        assert_eq!(mu_forward_periodic(&ep("", "001011"), &w("01")).unwrap(), ep("", "001"));
    }
}
