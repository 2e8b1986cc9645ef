use crate::word::{word_to_fraction, Fraction, Word};

/// First `m` symbols `t_1 … t_m` of the Thue–Morse word; `t_i` is the
/// parity of the binary digit sum of `i - 1`.
pub fn thue_morse(m: usize) -> Word {
    Word::from_bits((0..m as u64).map(|i| (i.count_ones() & 1) as u8))
}

/// `Σ_{i=1}^{bits} t_i 2^{-i}`, exact: the binary number `0.t_1 t_2 …`.
/// Within `2^{-bits}` of the Thue–Morse constant `τ = 0.41245403…`.
pub fn tm_constant(bits: usize) -> Fraction {
    word_to_fraction(&thue_morse(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::w;

    /// `t_1 = 0`, `t_{2n+1} = t_{n+1}`, `t_{2n+2} = 1 - t_{n+1}`.
    fn recursive(m: usize) -> Vec<u8> {
        let mut t = vec![0u8; m + 1];
        for i in 2..=m {
            t[i] = if i % 2 == 1 { t[(i - 1) / 2 + 1] } else { 1 - t[(i - 2) / 2 + 1] };
        }
        t[1..].to_vec()
    }

    #[test]
    fn listing() {
        assert_eq!(thue_morse(8), w("01101001"));
        assert_eq!(thue_morse(1), w("0"));
        assert_eq!(thue_morse(32), w("01101001100101101001011001101001"));
    }

    #[test]
    fn matches_recursive_definition() {
        assert_eq!(thue_morse(1000).iter().collect::<Vec<_>>(), recursive(1000));
    }

    #[test]
    fn constant() {
        assert_eq!(tm_constant(1), Fraction::zero());
        assert!((tm_constant(30).to_f64() - 0.412_454_03).abs() < 1e-8);
        assert!((tm_constant(40).to_f64() - 0.412_454_033_640_107_6).abs() < 1e-12);
    }
}
