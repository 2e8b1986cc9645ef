use crate::error::{domain, Error, Result};
use crate::word::{EPWord, Seq, Word, MAX_WORD_LEN};

use super::minimal::is_shift_bounded;

fn require_ends_with_one(s: &Word, op: &str) -> Result<()> {
    if s.ends_with_one() {
        Ok(())
    } else {
        domain(format!("{op} needs a word ending in 1, got {s}"))
    }
}

/// `f(s) = s~ s'`.
pub fn f_map(s: &Word) -> Result<Word> {
    require_ends_with_one(s, "f")?;
    Ok(s.tilde()?.concat(&s.prime()?))
}

/// `f` applied `k` times.
pub fn f_iter(s: &Word, k: usize) -> Result<Word> {
    let mut x = s.clone();
    for _ in 0..k {
        x = f_map(&x)?;
    }
    Ok(x)
}

/// `f^i(1)`.
pub fn f_power_of_one(i: usize) -> Word {
    f_iter(&Word::from_bits([1]), i).expect("f^i(1) ends in 1")
}

/// First `m` symbols of `d(s) = lim f^k(s)`.
///
/// `f^{k+1}(s)` starts with `f^k(s)~`, so once `|f^k(s)| > m` the first
/// `m` symbols never change again.
pub fn d_prefix(s: &Word, m: usize) -> Result<Word> {
    require_ends_with_one(s, "d")?;
    if m >= MAX_WORD_LEN {
        return Err(Error::Resource(format!("d prefix of length {m}")));
    }
    let mut x = s.clone();
    while x.len() <= m {
        x = f_map(&x)?;
    }
    Ok(x.prefix(m))
}

/// `e(s) = s~ (s*)^∞`.
pub fn e_map(s: &Word) -> Result<EPWord> {
    require_ends_with_one(s, "e")?;
    EPWord::new(s.tilde()?, s.star())
}

/// Levels above this are refused by [`e_threshold`].
pub const MAX_LEVEL: usize = 20;

/// `e_i = e(f^i(1))`; `e_0 = 0^∞`.
pub fn e_threshold(i: usize) -> Result<EPWord> {
    if i > MAX_LEVEL {
        return Err(Error::Resource(format!("level {i} exceeds {MAX_LEVEL}")));
    }
    e_map(&f_power_of_one(i))
}

/// `g_n(s) = s[1, n-1] 1`.
pub fn g_map(s: &Seq, n: usize) -> Result<Word> {
    if n == 0 {
        return domain("g_n needs n >= 1");
    }
    if let Seq::Finite(w) = s {
        if n > w.len() {
            return domain(format!("g_{n} of a word of length {}", w.len()));
        }
    }
    let mut g = s.prefix(n - 1);
    g.push(1);
    Ok(g)
}

/// Split a shift-bounded `s = u v u*` with `u` as long as possible
/// (`|u| ≤ |s|/2`).
pub fn p_decompose(s: &Word) -> Result<(Word, Word)> {
    if s.len() < 2 || !is_shift_bounded(s)? {
        return domain(format!("prefix-suffix reduction needs a shift-bounded word other than 1, got {s}"));
    }
    let n = s.len();
    for l in (1..=n / 2).rev() {
        let u = s.prefix(l);
        if s.ends_with(&u.star()) {
            return Ok((u, s.slice(l, n - l)));
        }
    }
    domain(format!("{s} has no complementary prefix/suffix pair"))
}

/// Prefix-suffix reduction `p(s) = (u v)~` for `s = u v u*`.
pub fn p_reduce(s: &Word) -> Result<Word> {
    let (u, v) = p_decompose(s)?;
    u.concat(&v).tilde()
}

/// `(a/2ⁿ) ∏_{i≥0} (1 - 2^{-2^i n})`, the limit of `f^k` on the dyadic
/// rational `a/2ⁿ`. Factors are multiplied until they are within `tol` of 1.
pub fn mirror_limit_real(a: u64, n: u32, tol: f64) -> Result<f64> {
    if n == 0 || n > 62 || a == 0 || a >= (1u64 << n) {
        return domain(format!("{a}/2^{n} must lie strictly inside (0, 1)"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return domain("tolerance must be positive");
    }
    let x = a as f64 / (1u64 << n) as f64;
    let mut prod = x;
    let mut exponent = n as f64;
    loop {
        let q = (-exponent).exp2();
        if q < tol {
            break;
        }
        prod *= 1.0 - q;
        exponent *= 2.0;
    }
    Ok(prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{ep, w};

    #[test]
    fn f_examples() {
        assert_eq!(f_map(&w("1")).unwrap(), w("01"));
        assert_eq!(f_map(&w("01")).unwrap(), w("0011"));
        assert_eq!(f_map(&w("0011")).unwrap(), w("00101101"));
        assert!(f_map(&w("10")).is_err());
    }

    #[test]
    fn d_prefix_examples() {
        assert_eq!(d_prefix(&w("1"), 15).unwrap(), w("001011001101001"));
        assert_eq!(d_prefix(&w("1"), 2).unwrap(), w("00"));
        assert_eq!(d_prefix(&w("01"), 3).unwrap(), w("001"));
    }

    #[test]
    fn e_examples() {
        assert_eq!(e_map(&w("01")).unwrap(), ep("00", "10"));
        assert_eq!(e_map(&w("001")).unwrap(), ep("000", "110"));
        assert_eq!(e_map(&w("1")).unwrap(), ep("0", "0"));
        assert_eq!(e_threshold(0).unwrap(), ep("0", "0"));
        assert_eq!(e_threshold(1).unwrap(), ep("00", "10"));
        assert_eq!(e_threshold(2).unwrap(), ep("0010", "1100"));
    }

    #[test]
    fn g_examples() {
        assert_eq!(g_map(&w("000111").into(), 3).unwrap(), w("001"));
        assert_eq!(g_map(&w("0011").into(), 4).unwrap(), w("0011"));
        assert_eq!(g_map(&ep("", "001").into(), 2).unwrap(), w("01"));
        assert!(g_map(&w("01").into(), 3).is_err());
    }

    #[test]
    fn p_examples() {
        assert_eq!(p_reduce(&w("001")).unwrap(), w("01"));
        assert_eq!(p_reduce(&w("001011")).unwrap(), w("0011"));
        assert_eq!(p_reduce(&w("01")).unwrap(), w("1"));
        assert_eq!(p_reduce(&w("0011")).unwrap(), w("01"));
        assert!(p_reduce(&w("0101")).is_err());
        assert!(p_reduce(&w("1")).is_err());
    }

    #[test]
    fn mirror_limit_examples() {
        let v12 = mirror_limit_real(1, 2, 1e-15).unwrap();
        let v11 = mirror_limit_real(1, 1, 1e-15).unwrap();
        let v32 = mirror_limit_real(3, 2, 1e-15).unwrap();
        assert!((v12 - 0.175_091_932_719_784_8).abs() < 1e-15);
        // f(1) = 01, so both start the same orbit
        assert!((v11 - v12).abs() < 1e-15);
        assert!((v32 - 3.0 * v12).abs() < 1e-15);
        assert!(mirror_limit_real(4, 2, 1e-15).is_err());
        assert!(mirror_limit_real(0, 2, 1e-15).is_err());
    }
}
