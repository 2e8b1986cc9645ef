use num_bigint::BigUint;

use dyadic::calculus::{accumulate_a, is_shift_bounded};
use dyadic::dimension::{coverage, e1_minimal_words, phi, plateaus};
use dyadic::sft::{
    build_sft, count_words, count_words_naive, entropy_upper_gap, gap_position, is_primitive,
    spectral_radius,
};
use dyadic::word::{w, Seq, Word};

fn windows(max_len: usize) -> impl Iterator<Item = Word> {
    (2..=max_len).flat_map(|len| {
        (0..1u64 << (len - 2)).map(move |mid| {
            let mut c = w("0");
            c.extend_from(&Word::from_code(mid, len - 2));
            c.push(1);
            c
        })
    })
}

#[test]
fn dp_counts_match_enumeration() {
    for c in windows(6) {
        for n in 1..=16 {
            assert_eq!(count_words(&c, n).unwrap(), count_words_naive(&c, n).unwrap(), "{c} n={n}");
        }
    }
}

#[test]
fn count_ratio_approaches_the_spectral_radius() {
    for c in e1_minimal_words(8) {
        let rho = spectral_radius(&build_sft(&c).unwrap(), 1e-12).unwrap();
        let (a, b): (BigUint, BigUint) = (count_words(&c, 200).unwrap(), count_words(&c, 201).unwrap());
        let ratio = (log2_big(&b) - log2_big(&a)).exp2();
        assert!((ratio - rho.midpoint()).abs() < 1e-6, "{c}: {ratio} vs {rho:?}");
        let growth = log2_big(&count_words(&c, 64).unwrap()) / 64.0;
        assert!((growth - rho.midpoint().log2()).abs() < 0.1, "{c}: {growth}");
    }
}

fn log2_big(x: &BigUint) -> f64 {
    let shift = x.bits().saturating_sub(60);
    let top: u64 = (x >> shift).try_into().unwrap();
    (top as f64).log2() + shift as f64
}

#[test]
fn entropy_gap_bounds_the_drop() {
    let mut checked = 0;
    for u in e1_minimal_words(6) {
        for v in windows(12).filter(|v| v.len() > u.len()) {
            let Ok((_, m)) = gap_position(&u, &v) else { continue };
            if m == 0 || !is_shift_bounded(&u).unwrap() {
                continue;
            }
            let lu = spectral_radius(&build_sft(&u).unwrap(), 1e-12).unwrap();
            let lv = spectral_radius(&build_sft(&v).unwrap(), 1e-12).unwrap();
            let gap = entropy_upper_gap(&u, &v, lv.midpoint()).unwrap();
            assert!(lu.upper - lv.lower <= gap + 1e-9, "u={u} v={v}: {} > {gap}", lu.upper - lv.lower);
            assert!(lu.upper + 1e-9 >= lv.lower, "u={u} v={v}");
            checked += 1;
        }
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn e1_minimal_systems_are_primitive() {
    for c in e1_minimal_words(8) {
        assert!(is_primitive(&build_sft(&c).unwrap()), "{c}");
    }
}

#[test]
fn accumulation_words_sit_above() {
    for c in e1_minimal_words(7) {
        let base = spectral_radius(&build_sft(&c).unwrap(), 1e-12).unwrap();
        for k in 1..=2 {
            let a = accumulate_a(&c, k).unwrap();
            if a.len() > 24 {
                continue;
            }
            let r = spectral_radius(&build_sft(&a).unwrap(), 1e-12).unwrap();
            assert!(r.lower > base.upper, "{c} k={k}: {r:?} vs {base:?}");
        }
    }
}

#[test]
fn dyadic_grid_is_non_increasing() {
    let mut last = f64::INFINITY;
    for k in 1..512u64 {
        let c: Seq = format!("{k}/1024").parse().unwrap();
        let r = phi(&c, 1e-9).unwrap();
        assert!(r.dim_lower <= last + 1e-9, "{k}/1024: {} after {last}", r.dim_lower);
        last = r.dim_upper;
    }
}

#[test]
fn enumeration_regression() {
    let list = plateaus(8, 1).unwrap();
    assert_eq!(list.len(), 30);
    assert!((coverage(&list) - 0.083_764_957_437_127_77).abs() < 1e-12);
    let deep = plateaus(8, 3).unwrap();
    assert_eq!(deep.len(), 90);
}
