use crate::error::{domain, Result};
use crate::word::{w as word, Seq, Word};

use super::maps::{p_decompose, p_reduce};
use super::minimal::{is_minimal_word, level_of, LevelClass};

fn require_minimal(s: &Word) -> Result<()> {
    if is_minimal_word(s) {
        Ok(())
    } else {
        domain(format!("{s} is not e_i-minimal"))
    }
}

/// `a_k(s) = s~ (s*)^k u*` where `s = u v u*`. Increases to `e(s)`.
pub fn accumulate_a(s: &Word, k: usize) -> Result<Word> {
    require_minimal(s)?;
    let (u, _) = p_decompose(s)?;
    Ok(s.tilde()?.concat(&s.star().repeat(k)).concat(&u.star()))
}

/// `b_k(s) = s^k p(s)`. Decreases to `s^∞`.
pub fn accumulate_b(s: &Word, k: usize) -> Result<Word> {
    require_minimal(s)?;
    Ok(s.repeat(k).concat(&p_reduce(s)?))
}

/// The chain `c, p(c), p²(c), …` up to and including `01`.
pub fn p_chain_to_01(c: &Word) -> Result<Vec<Word>> {
    let target = word("01");
    let mut chain = vec![c.clone()];
    while *chain.last().expect("non-empty") != target {
        let next = p_reduce(chain.last().expect("non-empty"))?;
        if next.len() < 2 {
            return domain(format!("p-chain of {c} skips 01"));
        }
        chain.push(next);
    }
    Ok(chain)
}

/// A word `w` with `c w (01)^∞` in the window language of `c`:
/// `w = a_1^{n_1} a_2^{n_2} … a_N^{n_N}` with `a_k = p^k(c)`, `a_N = 01`
/// and `n_k = ⌊|c|/|a_k|⌋ + 1`.
pub fn bridge_to_01(c: &Word) -> Result<Word> {
    if *c == word("01") {
        return Ok(Word::new());
    }
    if level_of(&Seq::Finite(c.clone()))? != LevelClass::Level(1) {
        return domain(format!("{c} is not an e_1-sequence"));
    }
    require_minimal(c)?;
    let chain = p_chain_to_01(c)?;
    let mut out = Word::new();
    for a in &chain[1..] {
        out.extend_from(&a.repeat(c.len() / a.len() + 1));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    #[test]
    fn a_k_examples() {
        assert_eq!(accumulate_a(&w("001"), 1).unwrap(), w("0001101"));
        assert_eq!(accumulate_a(&w("001"), 2).unwrap(), w("0001101101"));
        assert!(accumulate_a(&w("000111"), 1).is_err());
    }

    #[test]
    fn b_k_examples() {
        assert_eq!(accumulate_b(&w("001"), 1).unwrap(), w("00101"));
        assert_eq!(accumulate_b(&w("001"), 2).unwrap(), w("00100101"));
        assert!(accumulate_b(&w("0101"), 1).is_err());
    }

    #[test]
    fn bridge_examples() {
        assert_eq!(bridge_to_01(&w("001")).unwrap(), w("0101"));
        assert_eq!(bridge_to_01(&w("01")).unwrap(), w(""));
        assert_eq!(bridge_to_01(&w("0001")).unwrap(), w("001001010101"));
        assert!(bridge_to_01(&w("001011")).is_err());
        assert!(bridge_to_01(&w("000111")).is_err());
    }
}
