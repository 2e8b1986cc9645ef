use std::f64::consts::LN_2;
use std::sync::Arc;

use crate::calculus::{
    d_prefix, e_map, f_power_of_one, level_of, minimal_prefix, mu_forward, mu_forward_periodic,
    LevelClass, DEFAULT_SEARCH_LIMIT,
};
use crate::error::{domain, Result};
use crate::sft::{build_sft_with, spectral_radius, DEFAULT_MAX_WINDOW};
use crate::word::{to_fraction, word_to_fraction, EPWord, Fraction, Seq, Word};

use super::cache::SpectralCache;

/// Truncation length used when a point has no finite minimal prefix.
pub const DEFAULT_BOUNDS_LEN: usize = 16;

/// Knobs shared by the dimension pipeline.
#[derive(Clone, Debug)]
pub struct Settings {
    /// Target width of dimension enclosures on plateaus.
    pub tol: f64,
    pub max_window: usize,
    pub bounds_len: usize,
    pub cache: Option<Arc<SpectralCache>>,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            tol: 1e-9,
            max_window: DEFAULT_MAX_WINDOW,
            bounds_len: DEFAULT_BOUNDS_LEN,
            cache: None,
        }
    }
}

impl Settings {
    pub fn with_tol(tol: f64) -> Settings {
        Settings {
            tol,
            ..Settings::default()
        }
    }
}

/// A maximal interval `[e(r), r^∞]` on which the dimension is constant.
#[derive(Clone, Debug, PartialEq)]
pub struct Plateau {
    pub left: Fraction,
    pub right: Fraction,
    pub left_word: EPWord,
    pub right_word: EPWord,
    pub dim: f64,
    pub dim_lower: f64,
    pub dim_upper: f64,
    pub level: u32,
    pub representative: Word,
}

impl Plateau {
    pub fn length(&self) -> f64 {
        self.right.to_f64() - self.left.to_f64()
    }

    pub fn contains(&self, x: &Fraction) -> bool {
        self.left <= *x && *x <= self.right
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DimensionResult {
    pub dim_lower: f64,
    pub dim_upper: f64,
    pub level: LevelClass,
    /// The minimal prefix, when one was found.
    pub representative: Option<Word>,
    /// The level-1 word whose window system carries the dimension.
    pub reduced_e1: Option<Word>,
    pub plateau: Option<Plateau>,
    /// `c ≥ 1/2`, where the set itself is empty.
    pub empty: bool,
}

impl DimensionResult {
    pub fn dim(&self) -> f64 {
        0.5 * (self.dim_lower + self.dim_upper)
    }

    fn zero(level: LevelClass, empty: bool) -> DimensionResult {
        DimensionResult {
            dim_lower: 0.0,
            dim_upper: 0.0,
            level,
            representative: None,
            reduced_e1: None,
            plateau: None,
            empty,
        }
    }
}

fn prepare(c: &Seq) -> Result<Seq> {
    let c = match c.normalized() {
        Seq::Finite(w) => Seq::Finite(w.trim_trailing_zeros()),
        other => other,
    };
    if !c.contains_one() {
        return domain(format!("{c} has value 0"));
    }
    Ok(c)
}

pub fn phi(c: &Seq, tol: f64) -> Result<DimensionResult> {
    phi_with(c, &Settings::with_tol(tol))
}

pub fn phi_with(c: &Seq, settings: &Settings) -> Result<DimensionResult> {
    let c = prepare(c)?;
    if c.value() >= Fraction::half() {
        return Ok(DimensionResult::zero(LevelClass::AboveAll, true));
    }
    let i = match level_of(&c)? {
        LevelClass::AboveAll => return Ok(DimensionResult::zero(LevelClass::AboveAll, false)),
        LevelClass::Level(i) => i,
    };
    let report = minimal_prefix(&c, DEFAULT_SEARCH_LIMIT)?;
    match report.prefix {
        Some(r) => {
            let (reduced, p) = plateau_parts(&r, i, settings)?;
            Ok(DimensionResult {
                dim_lower: p.dim_lower,
                dim_upper: p.dim_upper,
                level: LevelClass::Level(i),
                representative: Some(r),
                reduced_e1: Some(reduced),
                plateau: Some(p),
                empty: false,
            })
        }
        None => {
            let (lo, hi) = dim_bounds_with(&c, settings.bounds_len, settings)?;
            Ok(DimensionResult {
                dim_lower: lo,
                dim_upper: hi,
                level: LevelClass::Level(i),
                representative: None,
                reduced_e1: None,
                plateau: None,
                empty: false,
            })
        }
    }
}

/// `log₂` of the spectral enclosure of the window system of `w`.
pub(crate) fn window_dim(w: &Word, settings: &Settings) -> Result<(f64, f64)> {
    let ts = build_sft_with(w, settings.max_window)?;
    // |d log₂ ρ| ≤ dρ / ln 2 for ρ ≥ 1
    let tol = settings.tol * LN_2;
    let compute = || spectral_radius(&ts, tol).map(|r| (r.lower, r.upper));
    let (lo, hi) = match &settings.cache {
        Some(cache) => cache.get_or_compute(&w.to_string(), tol, compute)?,
        None => compute()?,
    };
    Ok((lo.max(1.0).log2(), hi.max(1.0).log2()))
}

/// Decodes a level-`i` representative to level 1 and builds its plateau.
fn plateau_parts(r: &Word, i: u32, settings: &Settings) -> Result<(Word, Plateau)> {
    let reduced = if i > 1 {
        mu_forward(r, &f_power_of_one(i as usize - 1))?
    } else {
        r.clone()
    };
    let (lo, hi) = window_dim(&reduced, settings)?;
    let scale = 0.5f64.powi(i as i32 - 1);
    Ok((reduced, plateau_from(r, i, lo * scale, hi * scale)?))
}

pub(crate) fn plateau_from(r: &Word, level: u32, dim_lower: f64, dim_upper: f64) -> Result<Plateau> {
    let left_word = e_map(r)?;
    let right_word = EPWord::periodic(r)?;
    Ok(Plateau {
        left: to_fraction(&left_word),
        right: to_fraction(&right_word),
        left_word,
        right_word,
        dim: 0.5 * (dim_lower + dim_upper),
        dim_lower,
        dim_upper,
        level,
        representative: r.clone(),
    })
}

/// The plateau containing `c`.
pub fn interval(c: &Seq, tol: f64) -> Result<Plateau> {
    interval_with(c, &Settings::with_tol(tol))
}

pub fn interval_with(c: &Seq, settings: &Settings) -> Result<Plateau> {
    let c = prepare(c)?;
    let i = match level_of(&c)? {
        LevelClass::AboveAll => {
            return domain(format!("{c} lies in the zero-dimension ray; it has no plateau"))
        }
        LevelClass::Level(i) => i,
    };
    let report = minimal_prefix(&c, DEFAULT_SEARCH_LIMIT)?;
    let Some(r) = report.prefix else {
        return domain(format!(
            "{c} has no minimal prefix up to length {}",
            report.searched_up_to
        ));
    };
    Ok(plateau_parts(&r, i, settings)?.1)
}

/// Exact value of the first `bits` symbols of `d(1)`. Increases to the
/// zero-dimension threshold `1 − 2τ`; see [`zero_threshold_upper`].
pub fn zero_threshold(bits: usize) -> Result<Fraction> {
    if bits == 0 {
        return domain("zero_threshold needs at least one bit");
    }
    Ok(word_to_fraction(&d_prefix(&Word::from_bits([1]), bits)?))
}

/// `zero_threshold(bits) + 2^{-bits}`, an upper bound for `1 − 2τ`.
pub fn zero_threshold_upper(bits: usize) -> Result<Fraction> {
    let lower = zero_threshold(bits)?;
    let step = word_to_fraction(&Word::zeros(bits - 1).concat(&Word::from_bits([1])));
    let sum = lower.as_ratio() + step.as_ratio();
    Fraction::new(sum.numer().clone(), sum.denom().clone())
}

/// Certified bracket `[lower, upper]` of the dimension at `c` from the two
/// truncations of `c` to `n` symbols: `c[1, n] ≤ c ≤ c[1, n] + 2^{-n}`, and
/// the dimension is non-increasing in `c`. Points below `e_i` are first
/// decoded with the deepest `μ_u`, `u = f^j(1)`, that applies, so the
/// truncation happens at level 1 and the bracket shrinks by `2^{-j}`.
pub fn dim_bounds(c: &Seq, n: usize, tol: f64) -> Result<(f64, f64)> {
    dim_bounds_with(c, n, &Settings::with_tol(tol))
}

pub fn dim_bounds_with(c: &Seq, n: usize, settings: &Settings) -> Result<(f64, f64)> {
    let c = prepare(c)?;
    if n == 0 {
        return domain("truncation length must be positive");
    }
    if c.value() >= Fraction::half() {
        return Ok((0.0, 0.0));
    }
    let i = match level_of(&c)? {
        LevelClass::AboveAll => return Ok((0.0, 0.0)),
        LevelClass::Level(i) => i,
    };
    if let Some(r) = minimal_prefix(&c, DEFAULT_SEARCH_LIMIT)?.prefix {
        let p = plateau_parts(&r, i, settings)?.1;
        return Ok((p.dim_lower, p.dim_upper));
    }
    let (target, scale) = reduce(&c, i);
    if let Seq::Finite(w) = &target {
        if w.len() <= n {
            let (lo, hi) = finite_dim(w, settings)?;
            return Ok((lo * scale, hi * scale));
        }
    }
    let head = target.prefix(n);
    let below = head.trim_trailing_zeros();
    let upper = match below.contains_one() {
        true => finite_dim(&below, settings)?.1,
        false => 1.0,
    };
    let lower = match increment(&head) {
        Some(above) => finite_dim(&above.trim_trailing_zeros(), settings)?.0,
        None => 0.0,
    };
    Ok((lower * scale, upper * scale))
}

/// The deepest decoding `μ_{f^j(1)}(c)`, `j < i`, that is again a sequence
/// with a level, with its dimension factor `2^{-j}`.
fn reduce(c: &Seq, i: u32) -> (Seq, f64) {
    let ep = c.to_ep();
    for j in (1..i as usize).rev() {
        let Ok(t) = mu_forward_periodic(&ep, &f_power_of_one(j)) else {
            continue;
        };
        let t = prepare(&Seq::Periodic(t));
        if let Ok(t) = t {
            if t.value() < Fraction::half() && matches!(level_of(&t), Ok(LevelClass::Level(_))) {
                return (t, 0.5f64.powi(j as i32));
            }
        }
    }
    (c.clone(), 1.0)
}

/// Dimension at the finite word `w` (`w 0^∞`): through its plateau when it
/// has a minimal prefix, otherwise directly from its own window system,
/// which is exactly the set for `w 0^∞`.
fn finite_dim(w: &Word, settings: &Settings) -> Result<(f64, f64)> {
    let c = Seq::Finite(w.clone());
    if c.value() >= Fraction::half() {
        return Ok((0.0, 0.0));
    }
    let i = match level_of(&c)? {
        LevelClass::AboveAll => return Ok((0.0, 0.0)),
        LevelClass::Level(i) => i,
    };
    match minimal_prefix(&c, w.len())?.prefix {
        Some(r) => {
            let p = plateau_parts(&r, i, settings)?.1;
            Ok((p.dim_lower, p.dim_upper))
        }
        None => window_dim(w, settings),
    }
}

/// `w + 2^{-|w|}` as a word of the same length, `None` on overflow.
fn increment(w: &Word) -> Option<Word> {
    let bits: Vec<u8> = w.iter().collect();
    let k = bits.iter().rposition(|&b| b == 0)?;
    let mut out = bits[..k].to_vec();
    out.push(1);
    out.resize(bits.len(), 0);
    Some(Word::from_bits(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::e_threshold;
    use crate::word::{ep, frac, w};

    const LOG2_GOLDEN: f64 = 0.694_241_913_630_617_3;

    fn seq(s: &str) -> Seq {
        s.parse().unwrap()
    }

    #[test]
    fn golden_word() {
        let r = phi(&seq("001"), 1e-9).unwrap();
        assert!(r.dim_lower <= LOG2_GOLDEN && LOG2_GOLDEN <= r.dim_upper, "{r:?}");
        assert!(r.dim_upper - r.dim_lower <= 1e-9);
        assert_eq!(r.level, LevelClass::Level(1));
        assert_eq!(r.representative, Some(w("001")));
        let p = r.plateau.unwrap();
        assert_eq!((p.left, p.right), (frac(3, 28), frac(1, 7)));
    }

    #[test]
    fn second_level_halves() {
        let r = phi(&seq("001011"), 1e-9).unwrap();
        assert!((r.dim() - LOG2_GOLDEN / 2.0).abs() < 1e-9);
        assert_eq!(r.level, LevelClass::Level(2));
        assert_eq!(r.reduced_e1, Some(w("001")));
    }

    #[test]
    fn zero_and_empty() {
        let r = phi(&seq("1/4"), 1e-9).unwrap();
        assert_eq!((r.dim_lower, r.dim_upper), (0.0, 0.0));
        assert!(!r.empty);
        let r = phi(&seq("1/2"), 1e-9).unwrap();
        assert!(r.empty);
        assert_eq!(phi(&seq("0011"), 1e-9).unwrap().dim_upper, 0.0);
        assert!(phi(&seq("0"), 1e-9).is_err());
    }

    #[test]
    fn plateau_of_a_non_minimal_word() {
        let p = interval(&seq("000111"), 1e-9).unwrap();
        assert_eq!((p.left.clone(), p.right.clone()), (frac(3, 28), frac(1, 7)));
        assert_eq!(p.left_word, ep("000", "110"));
        assert_eq!(p.right_word, ep("", "001"));
        assert_eq!(p.representative, w("001"));
    }

    #[test]
    fn fraction_input_hits_the_left_endpoint() {
        let r = phi(&seq("3/28"), 1e-9).unwrap();
        assert_eq!(r.representative, Some(w("001")));
    }

    #[test]
    fn no_plateau_in_the_zero_ray() {
        assert!(interval(&seq("01"), 1e-9).is_err());
        assert!(interval(&seq("00(10)"), 1e-9).is_err());
    }

    #[test]
    fn threshold_values() {
        assert_eq!(zero_threshold(4).unwrap(), frac(1, 8));
        let t = zero_threshold(40).unwrap().to_f64();
        assert!(0.175_091_93 < t && t < 0.175_091_94, "{t}");
        let u = zero_threshold_upper(40).unwrap().to_f64();
        assert!(t < u && u - t < 1e-12);
    }

    #[test]
    fn first_threshold_bracket() {
        let c: Seq = e_threshold(1).unwrap().into();
        let (lo, hi) = dim_bounds(&c, 14, 1e-6).unwrap();
        assert!(lo <= 0.5 && 0.5 <= hi && hi - lo <= 0.02, "[{lo}, {hi}]");
    }

    #[test]
    fn bracket_at_a_plateau_endpoint_is_the_plateau() {
        let (lo, hi) = dim_bounds(&ep("", "001").into(), 12, 1e-9).unwrap();
        assert!(lo <= LOG2_GOLDEN && LOG2_GOLDEN <= hi && hi - lo < 1e-8);
    }

    #[test]
    fn increments() {
        assert_eq!(increment(&w("0011")), Some(w("0100")));
        assert_eq!(increment(&w("0010")), Some(w("0011")));
        assert_eq!(increment(&w("11")), None);
    }
}
