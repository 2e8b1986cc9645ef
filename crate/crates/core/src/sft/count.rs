use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::word::Word;

use super::system::{build_sft, TransitionSystem};

/// Number of length-`n` words all of whose length-`|c|` windows lie in
/// `[c, c*]`. For `n < |c|` it counts prefixes of valid windows.
pub fn count_words(c: &Word, n: usize) -> Result<BigUint> {
    let ts = build_sft(c)?;
    Ok(count_in(&ts, n))
}

pub fn count_in(ts: &TransitionSystem, n: usize) -> BigUint {
    let l = ts.window_len();
    if n < l {
        let shift = l - n;
        let (lo, hi) = (ts.code(0) >> shift, ts.code(ts.state_count() - 1) >> shift);
        return BigUint::from(hi - lo + 1);
    }
    let mut counts = vec![BigUint::one(); ts.state_count()];
    for _ in l..n {
        let mut next = vec![BigUint::zero(); counts.len()];
        for (i, ci) in counts.iter().enumerate() {
            if ci.is_zero() {
                continue;
            }
            for j in ts.successors(i) {
                next[j] += ci;
            }
        }
        counts = next;
    }
    counts.into_iter().sum()
}

/// Exhaustive version of [`count_words`]: every one of the `2ⁿ` words is
/// generated and each of its windows compared against `c` and `c*`.
pub fn count_words_naive(c: &Word, n: usize) -> Result<BigUint> {
    if n > 30 {
        return Err(Error::Resource(format!("naive count over 2^{n} words")));
    }
    let l = c.len();
    if l == 0 || l > 63 {
        return Err(Error::Domain(format!("window length {l}")));
    }
    let lo = c.to_code().expect("short word");
    let hi = c.star().to_code().expect("short word");
    let mask = (1u64 << l) - 1;
    if n < l {
        let prefixes: BTreeSet<u64> = (lo..=hi).map(|x| x >> (l - n)).collect();
        return Ok(BigUint::from(prefixes.len()));
    }
    let total = (0..1u64 << n)
        .filter(|&x| (0..=n - l).all(|k| (lo..=hi).contains(&((x >> k) & mask))))
        .count();
    Ok(BigUint::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn dp_examples() {
        assert_eq!(count_words(&w("001"), 3).unwrap(), BigUint::from(6u8));
        assert_eq!(count_words(&w("001"), 4).unwrap(), BigUint::from(10u8));
        for n in 1..12 {
            assert_eq!(count_words(&w("01"), n).unwrap(), BigUint::from(2u8));
        }
    }

    #[test]
    fn naive_examples() {
        assert_eq!(count_words_naive(&w("001"), 4).unwrap(), BigUint::from(10u8));
        assert_eq!(count_words_naive(&w("01"), 7).unwrap(), BigUint::from(2u8));
        assert_eq!(count_words_naive(&w("0001"), 4).unwrap(), BigUint::from(14u8));
        assert!(count_words_naive(&w("01"), 31).is_err());
    }

    #[test]
    fn short_lengths_count_window_prefixes() {
        // prefixes of 001..110: 0, 1
        assert_eq!(count_words(&w("001"), 1).unwrap(), BigUint::from(2u8));
        // 00, 01, 10, 11
        assert_eq!(count_words(&w("001"), 2).unwrap(), BigUint::from(4u8));
        assert_eq!(count_words_naive(&w("001"), 2).unwrap(), BigUint::from(4u8));
    }
}
