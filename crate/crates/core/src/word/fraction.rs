use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use super::finite::Word;
use super::periodic::EPWord;
use crate::error::{Error, Result};

/// Exact rational in `[0, 1]`, always in lowest terms.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fraction(Ratio<BigUint>);

impl Fraction {
    pub fn new(num: impl Into<BigUint>, den: impl Into<BigUint>) -> Result<Fraction> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        if num > den {
            return Err(Error::Domain(format!("{num}/{den} lies outside [0, 1]")));
        }
        Ok(Fraction(Ratio::new(num, den)))
    }

    pub fn zero() -> Fraction {
        Fraction(Ratio::zero())
    }

    pub fn numer(&self) -> &BigUint {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigUint {
        self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        // ratio of two huge integers: scale both down together
        let (n, d) = (self.numer(), self.denom());
        let shift = d.bits().saturating_sub(1000);
        let n = (n >> shift).to_f64().unwrap_or(f64::INFINITY);
        let d = (d >> shift).to_f64().unwrap_or(f64::INFINITY);
        n / d
    }

    pub fn as_ratio(&self) -> &Ratio<BigUint> {
        &self.0
    }

    pub(crate) fn from_ratio(r: Ratio<BigUint>) -> Fraction {
        Fraction(r)
    }

    pub fn half() -> Fraction {
        Fraction(Ratio::new(BigUint::one(), BigUint::from(2u8)))
    }
}

fn word_value(w: &Word) -> BigUint {
    w.iter().fold(BigUint::zero(), |acc, b| (acc << 1u32) + BigUint::from(b))
}

/// Exact value of the binary expansion `0.pre per per …`.
pub fn to_fraction(x: &EPWord) -> Fraction {
    let (pre, per) = (x.preperiod(), x.period());
    let cycle = (BigUint::one() << per.len()) - BigUint::one();
    let num = word_value(pre) * &cycle + word_value(per);
    let den = (BigUint::one() << pre.len()) * cycle;
    Fraction(Ratio::new(num, den))
}

/// Value of a finite word read as `w 0^∞`.
pub fn word_to_fraction(w: &Word) -> Fraction {
    Fraction(Ratio::new(word_value(w), BigUint::one() << w.len()))
}

/// Binary expansion of `q` by long division. Dyadic rationals get the
/// expansion ending in `0^∞`; `1` itself is `(1)`.
pub fn from_fraction(q: &Fraction) -> EPWord {
    let (num, den) = (q.numer(), q.denom());
    if num == den {
        return EPWord::periodic(&Word::from_bits([1])).expect("non-empty");
    }
    let mut digits = Word::new();
    let mut seen: HashMap<BigUint, usize> = HashMap::new();
    let mut r = num.clone();
    loop {
        if r.is_zero() {
            return EPWord::from_finite(&digits);
        }
        if let Some(&start) = seen.get(&r) {
            let pre = digits.prefix(start);
            let per = digits.slice(start, digits.len());
            return EPWord::new(pre, per).expect("non-empty period");
        }
        seen.insert(r.clone(), digits.len());
        r <<= 1u32;
        if &r >= den {
            r -= den;
            digits.push(1);
        } else {
            digits.push(0);
        }
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fraction> {
        let (n, d) = s
            .split_once('/')
            .ok_or_else(|| Error::Parse(format!("expected num/den, got {s:?}")))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<BigUint>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
        };
        Fraction::new(parse(n)?, parse(d)?)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fraction({self})")
    }
}

/// Shorthand: `frac(3, 28)`. Panics outside `[0, 1]`.
pub fn frac(n: u64, d: u64) -> Fraction {
    Fraction::new(n, d).expect("valid fraction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::periodic::ep;

    #[test]
    fn to_fraction_examples() {
        assert_eq!(to_fraction(&ep("", "001")), frac(1, 7));
        assert_eq!(to_fraction(&ep("000", "110")), frac(3, 28));
        assert_eq!(to_fraction(&ep("1", "0")), frac(1, 2));
    }

    #[test]
    fn from_fraction_examples() {
        assert_eq!(from_fraction(&frac(1, 7)), ep("", "001"));
        assert_eq!(from_fraction(&frac(1, 4)), ep("01", "0"));
        assert_eq!(from_fraction(&frac(3, 28)), ep("000", "110"));
        assert_eq!(from_fraction(&frac(0, 1)), ep("", "0"));
        assert_eq!(from_fraction(&frac(1, 1)), ep("", "1"));
    }

    #[test]
    fn lowest_terms_and_parse() {
        let q: Fraction = "6/56".parse().unwrap();
        assert_eq!(q.to_string(), "3/28");
        assert!("5/4".parse::<Fraction>().is_err());
        assert!("1/0".parse::<Fraction>().is_err());
        assert!("0.5".parse::<Fraction>().is_err());
    }

    #[test]
    fn long_periods_do_not_overflow() {
        let x = ep("0101", &"0011".repeat(40));
        assert_eq!(from_fraction(&to_fraction(&x)), x);
    }
}
