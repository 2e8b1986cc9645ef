use std::cmp::Ordering;

use dyadic::calculus::{
    f_map, is_minimal_word, is_shift_bounded, level_of, minimal_prefix, mu_forward, mu_inverse,
    p_reduce, LevelClass, DEFAULT_SEARCH_LIMIT,
};
use dyadic::dimension::{e1_minimal_words, phi, phi_with, Settings};
use dyadic::Error;
use dyadic::sft::{count_words, count_words_naive};
use dyadic::word::{compare, from_fraction, to_fraction, w, EPWord, Fraction, Seq, Word};
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 0..=max).prop_map(Word::from_bits)
}

fn valid_c(max: usize) -> impl Strategy<Value = Word> {
    word(max).prop_map(|mut x| {
        x.push(1);
        x
    })
}

fn eventually_periodic() -> impl Strategy<Value = EPWord> {
    (word(8), prop::collection::vec(0u8..2, 1..=6))
        .prop_map(|(pre, per)| EPWord::new(pre, Word::from_bits(per)).unwrap())
}

fn below_half() -> impl Strategy<Value = Fraction> {
    (1u64..4000, 4001u64..8001).prop_map(|(n, d)| Fraction::new(n, d).unwrap())
}

fn shift_bounded() -> impl Strategy<Value = Word> {
    let pool: Vec<Word> = (1..=10usize)
        .flat_map(|len| (0..1u64 << len).map(move |code| Word::from_code(code, len)))
        .filter(|x| x.ends_with_one() && is_shift_bounded(x).unwrap())
        .collect();
    prop::sample::select(pool)
}

fn window(max: usize) -> impl Strategy<Value = Word> {
    word(max).prop_map(|x| {
        let mut c = w("0");
        c.extend_from(&x);
        c.push(1);
        c
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn star_and_tilde_are_involutions(x in valid_c(20)) {
        prop_assert_eq!(x.star().star(), x.clone());
        prop_assert_eq!(x.tilde().unwrap().tilde().unwrap(), x);
    }

    #[test]
    fn word_text_round_trips(x in word(40)) {
        let s = x.to_string();
        prop_assert_eq!(s.parse::<Word>().unwrap(), x);
    }

    #[test]
    fn fractions_round_trip(x in eventually_periodic()) {
        let q = to_fraction(&x);
        let back = from_fraction(&q);
        prop_assert_eq!(to_fraction(&back), q);
    }

    #[test]
    fn word_order_matches_numeric_order(a in eventually_periodic(), b in eventually_periodic()) {
        prop_assert_eq!(compare(&a, &b), to_fraction(&a).cmp(&to_fraction(&b)));
    }

    #[test]
    fn f_preserves_shift_boundedness(x in shift_bounded()) {
        let y = f_map(&x).unwrap();
        prop_assert!(is_shift_bounded(&y).unwrap());
        prop_assert_eq!(y.len(), 2 * x.len());
    }

    #[test]
    fn p_undoes_f(x in shift_bounded()) {
        prop_assert_eq!(p_reduce(&f_map(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn minimal_prefix_is_minimal(x in valid_c(12)) {
        let c = Seq::Finite(x);
        if let LevelClass::Level(_) = level_of(&c).unwrap() {
            let report = minimal_prefix(&c, DEFAULT_SEARCH_LIMIT).unwrap();
            if let Some(r) = report.prefix {
                prop_assert!(is_minimal_word(&r));
                prop_assert!(is_shift_bounded(&r).unwrap());
            }
        }
    }

    #[test]
    fn substitution_round_trips_and_keeps_order(i in 0usize..30, j in 0usize..30) {
        let words = e1_minimal_words(8);
        let (a, b) = (&words[i], &words[j]);
        let u = w("01");
        let (x, y) = (mu_inverse(a, &u).unwrap(), mu_inverse(b, &u).unwrap());
        prop_assert_eq!(&mu_forward(&x, &u).unwrap(), a);
        let before = compare(&EPWord::from_finite(a), &EPWord::from_finite(b));
        let after = compare(&EPWord::from_finite(&x), &EPWord::from_finite(&y));
        prop_assert_eq!(before, after);
    }

    #[test]
    fn counts_match_brute_force(c in window(6), n in 1usize..14) {
        prop_assert_eq!(count_words(&c, n).unwrap(), count_words_naive(&c, n).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dimension_is_non_increasing(a in below_half(), b in below_half()) {
        let settings = Settings::with_tol(1e-8);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let run = |q: &Fraction| phi_with(&Seq::from(from_fraction(q)), &settings);
        // long minimal prefixes exceed the window cap; those points are skipped
        let (x, y) = match (run(&lo), run(&hi)) {
            (Ok(x), Ok(y)) => (x, y),
            (Err(Error::Resource(_)), _) | (_, Err(Error::Resource(_))) => return Ok(()),
            (Err(e), _) | (_, Err(e)) => return Err(TestCaseError::fail(e.to_string())),
        };
        prop_assert!(x.dim_upper + 1e-8 >= y.dim_lower, "{lo} {x:?} vs {hi} {y:?}");
        prop_assert!(x.dim_lower <= 1.0 && y.dim_lower >= 0.0);
    }

    #[test]
    fn plateau_points_share_the_dimension(k in 0usize..30, t in 1u64..999) {
        let c = e1_minimal_words(8)[k].clone();
        let r = phi(&Seq::Finite(c), 1e-9).unwrap();
        let p = r.plateau.unwrap();
        let frac = Fraction::new(t, 1000u64).unwrap();
        let x = p.left.as_ratio() + (p.right.as_ratio() - p.left.as_ratio()) * frac.as_ratio();
        let q = Fraction::new(x.numer().clone(), x.denom().clone()).unwrap();
        let inner = phi(&Seq::from(from_fraction(&q)), 1e-9).unwrap();
        prop_assert_eq!(inner.level, LevelClass::Level(1));
        prop_assert!((inner.dim() - p.dim).abs() < 1e-8);
        prop_assert_eq!(compare(&p.left_word, &p.right_word), Ordering::Less);
    }
}
