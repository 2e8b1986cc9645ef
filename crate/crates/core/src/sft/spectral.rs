use crate::calculus::is_shift_bounded;
use crate::error::{domain, Error, Result};
use crate::word::Word;

use super::scc::{sccs, Component};
use super::system::TransitionSystem;

/// Certified enclosure `lower ≤ ρ ≤ upper` of a spectral radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralResult {
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
    /// Index (in [`sccs`] order) of the component carrying the largest lower
    /// bound; `None` when there is no nontrivial component.
    pub component_id: Option<usize>,
}

impl SpectralResult {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }

    /// `log₂` of the enclosure, clamped at 0 (ρ < 1 never occurs for a
    /// nontrivial component).
    pub fn log2(&self) -> (f64, f64) {
        (self.lower.max(1.0).log2(), self.upper.max(1.0).log2())
    }
}

pub fn iteration_cap(window_len: usize, tol: f64) -> usize {
    let l = window_len.max(1) as f64;
    (200.0 * l * (1.0 / tol).ln().max(1.0)).ceil() as usize
}

/// Spectral radius of the adjacency matrix: the maximum over nontrivial
/// strongly connected components, each enclosed by Collatz–Wielandt bounds
/// from power iteration on `A + I`.
pub fn spectral_radius(ts: &TransitionSystem, tol: f64) -> Result<SpectralResult> {
    spectral_radius_capped(ts, tol, iteration_cap(ts.window_len(), tol))
}

pub(crate) fn spectral_radius_capped(
    ts: &TransitionSystem,
    tol: f64,
    cap: usize,
) -> Result<SpectralResult> {
    if tol.is_nan() || tol <= 0.0 {
        return domain(format!("tolerance must be positive, got {tol}"));
    }
    let comps = sccs(ts);
    let mut local = vec![u32::MAX; ts.state_count()];
    let mut best: Option<SpectralResult> = None;
    let mut iterations = 0;

    for (id, comp) in comps.iter().enumerate().filter(|(_, c)| c.nontrivial) {
        let r = match component_radius(ts, comp, &mut local, tol, cap) {
            Ok(r) => r,
            Err(Error::Convergence { message, lower, upper }) => {
                let (lower, upper) = match best {
                    Some(b) => (lower.max(b.lower), upper.max(b.upper)),
                    None => (lower, upper),
                };
                return Err(Error::Convergence { message, lower, upper });
            }
            Err(e) => return Err(e),
        };
        iterations += r.iterations;
        best = Some(match best {
            None => SpectralResult { component_id: Some(id), ..r },
            Some(b) => SpectralResult {
                lower: b.lower.max(r.lower),
                upper: b.upper.max(r.upper),
                iterations: 0,
                component_id: if r.lower > b.lower { Some(id) } else { b.component_id },
            },
        });
    }

    Ok(match best {
        Some(b) => SpectralResult { iterations, ..b },
        None => SpectralResult {
            lower: 0.0,
            upper: 0.0,
            iterations: 0,
            component_id: None,
        },
    })
}

fn component_radius(
    ts: &TransitionSystem,
    comp: &Component,
    local: &mut [u32],
    tol: f64,
    cap: usize,
) -> Result<SpectralResult> {
    let n = comp.len();
    for (k, &s) in comp.states.iter().enumerate() {
        local[s] = k as u32;
    }
    let member = |s: usize, local: &[u32]| {
        let k = local[s];
        (k != u32::MAX && comp.states[k as usize] == s).then_some(k)
    };
    let succ: Vec<[u32; 2]> = comp
        .states
        .iter()
        .map(|&s| {
            let [a, b] = ts.successor_pair(s);
            [
                a.and_then(|x| member(x, local)).unwrap_or(u32::MAX),
                b.and_then(|x| member(x, local)).unwrap_or(u32::MAX),
            ]
        })
        .collect();

    let internal: usize = succ.iter().flatten().filter(|&&x| x != u32::MAX).count();
    if internal == n {
        // a single cycle: a permutation matrix
        return Ok(SpectralResult {
            lower: 1.0,
            upper: 1.0,
            iterations: 0,
            component_id: None,
        });
    }

    let mut v = vec![1.0f64; n];
    let mut next = vec![0.0f64; n];
    let (mut lower, mut upper) = (0.0f64, f64::INFINITY);
    for it in 1..=cap {
        let (mut lo, mut hi, mut top) = (f64::INFINITY, 0.0f64, 0.0f64);
        for i in 0..n {
            let mut x = v[i];
            for &j in &succ[i] {
                if j != u32::MAX {
                    x += v[j as usize];
                }
            }
            let ratio = x / v[i];
            lo = lo.min(ratio);
            hi = hi.max(ratio);
            top = top.max(x);
            next[i] = x;
        }
        lower = lower.max(lo - 1.0);
        upper = upper.min(hi - 1.0);
        if upper - lower <= tol {
            return Ok(SpectralResult {
                lower,
                upper,
                iterations: it,
                component_id: None,
            });
        }
        for (a, b) in v.iter_mut().zip(&next) {
            *a = b / top;
        }
    }
    Err(Error::Convergence {
        message: format!("power iteration on a {n}-state component hit the cap of {cap} steps"),
        lower,
        upper,
    })
}

/// Additive slack `λ_v·2/λ_v^{m|u|−m+1}` bounding `λ_u − λ_v` when `u` is a
/// shift-bounded prefix of `v` with `u^∞ < v`. Here `j` is the first
/// position (1-based) where `u^∞` and `v0^∞` differ and `m = ⌊(j−1)/|u|⌋`.
pub fn entropy_upper_gap(u: &Word, v: &Word, lambda_v: f64) -> Result<f64> {
    let (_, m) = gap_position(u, v)?;
    let exponent = (m * u.len() - m + 1) as i32;
    Ok(lambda_v * 2.0 / lambda_v.powi(exponent))
}

/// `(j, m)` as in [`entropy_upper_gap`].
pub fn gap_position(u: &Word, v: &Word) -> Result<(usize, usize)> {
    if u.is_empty() || !u.contains_one() || !is_shift_bounded(u)? {
        return domain(format!("{u} is not shift-bounded"));
    }
    if !v.starts_with(u) {
        return domain(format!("{u} is not a prefix of {v}"));
    }
    let horizon = v.len() + u.len();
    let j = (0..horizon)
        .find(|&i| {
            let vi = if i < v.len() { v.bit(i) } else { 0 };
            vi != u.bit(i % u.len())
        })
        .map(|i| i + 1);
    let Some(j) = j else {
        return domain(format!("{v} agrees with ({u})^∞"));
    };
    if j > v.len() || v.bit(j - 1) == 0 {
        return domain(format!("({u})^∞ is not below {v}"));
    }
    let m = (j - 1) / u.len();
    if m == 0 {
        return domain("common prefix shorter than u");
    }
    Ok((j, m))
}
