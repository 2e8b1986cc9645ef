use num_bigint::BigUint;
use num_rational::Ratio;
use rayon::prelude::*;

use crate::calculus::{f_power_of_one, is_minimal_word, level_of, mu_inverse, LevelClass};
use crate::error::{Error, Result};
use crate::word::{from_fraction, Fraction, Seq, Word};

use super::phi::{phi_with, plateau_from, window_dim, Plateau, Settings};

/// Longest e_1-minimal word the enumeration accepts.
pub const MAX_ENUM_LEN: usize = 12;
pub const MAX_ENUM_LEVEL: u32 = 6;

/// All e_1-minimal words of length `3..=max_len`, in length-then-lex order.
pub fn e1_minimal_words(max_len: usize) -> Vec<Word> {
    (3..=max_len)
        .flat_map(|len| (0..1u64 << (len - 3)).map(move |mid| (len, mid)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(len, mid)| {
            let mut word = Word::zeros(2);
            word.extend_from(&Word::from_code(mid, len - 3));
            word.push(1);
            word
        })
        .filter(|word| {
            is_minimal_word(word)
                && level_of(&Seq::Finite(word.clone())) == Ok(LevelClass::Level(1))
        })
        .collect()
}

pub fn plateaus(max_len: usize, max_level: u32) -> Result<Vec<Plateau>> {
    plateaus_with(max_len, max_level, &Settings::default())
}

/// Every plateau whose level-1 representative has length `≤ max_len`,
/// with its images at levels `2..=max_level`, sorted by left endpoint.
pub fn plateaus_with(max_len: usize, max_level: u32, settings: &Settings) -> Result<Vec<Plateau>> {
    if max_len > MAX_ENUM_LEN.min(settings.max_window) {
        return Err(Error::Resource(format!(
            "max_len {max_len} exceeds the enumeration cap {}",
            MAX_ENUM_LEN.min(settings.max_window)
        )));
    }
    if !(1..=MAX_ENUM_LEVEL).contains(&max_level) {
        return Err(Error::Resource(format!(
            "max_level must lie in 1..={MAX_ENUM_LEVEL}, got {max_level}"
        )));
    }
    let bases: Vec<Word> = (1..max_level as usize).map(f_power_of_one).collect();
    let per_word: Vec<Vec<Plateau>> = e1_minimal_words(max_len)
        .into_par_iter()
        .map(|c| {
            let (lo, hi) = window_dim(&c, settings)?;
            let mut out = vec![plateau_from(&c, 1, lo, hi)?];
            for (k, u) in bases.iter().enumerate() {
                let scale = 0.5f64.powi(k as i32 + 1);
                let r = mu_inverse(&c, u)?;
                out.push(plateau_from(&r, k as u32 + 2, lo * scale, hi * scale)?);
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;

    let mut all: Vec<Plateau> = per_word.into_iter().flatten().collect();
    all.sort_by(|a, b| a.left.cmp(&b.left).then(a.right.cmp(&b.right)));
    all.dedup_by(|b, a| a.left == b.left && a.right == b.right);
    for pair in all.windows(2) {
        if pair[0].right > pair[1].left {
            return Err(Error::Consistency(format!(
                "plateaus of {} [{}, {}] and {} [{}, {}] overlap",
                pair[0].representative,
                pair[0].left,
                pair[0].right,
                pair[1].representative,
                pair[1].left,
                pair[1].right
            )));
        }
    }
    Ok(all)
}

/// Total length of a plateau list.
pub fn coverage(list: &[Plateau]) -> f64 {
    list.iter().map(Plateau::length).sum()
}

/// Runs the dimension on `samples` finite words spread evenly through `p`
/// and on both endpoints; true iff every enclosure meets `p.dim ± tol`.
pub fn verify_plateau_constancy(p: &Plateau, samples: usize, settings: &Settings) -> Result<bool> {
    let mut points: Vec<Seq> = vec![p.left_word.clone().into(), p.right_word.clone().into()];
    points.extend(sample_words(p, samples).into_iter().map(Seq::Finite));
    let (lo, hi) = (p.dim_lower - settings.tol, p.dim_upper + settings.tol);
    for x in &points {
        let r = phi_with(x, settings)?;
        if r.dim_upper < lo || r.dim_lower > hi {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finite words at the midpoints of `samples` equal strata of `p`,
/// truncated just far enough to stay inside their stratum.
pub fn sample_words(p: &Plateau, samples: usize) -> Vec<Word> {
    let (left, right) = (p.left.as_ratio(), p.right.as_ratio());
    let width = right - left;
    let n = BigUint::from(samples.max(1));
    let two = BigUint::from(2u8);
    // 2^-bits below a quarter of a stratum
    let quarter = &width / (BigUint::from(4u8) * &n);
    let mut bits = 1usize;
    while Ratio::new(BigUint::from(1u8), two.pow(bits as u32)) > quarter {
        bits += 1;
    }
    (0..samples)
        .map(|k| {
            let offset = Ratio::new(BigUint::from(2 * k + 1), BigUint::from(2u8) * &n);
            let x = left + &width * offset;
            from_fraction(&Fraction::from_ratio(x)).prefix(bits).trim_trailing_zeros()
        })
        .collect()
}
