//! Dimension of the points `0^k 1`, against the root of `x^k = x^{k-1} + … + 1`.

use dyadic::dimension::phi;
use dyadic::word::{Seq, Word};

fn main() -> dyadic::Result<()> {
    println!("{:>3}  {:>14}  {:>14}", "k", "dim", "log2 root");
    for k in 2..=10 {
        let mut w = Word::zeros(k);
        w.push(1);
        let r = phi(&Seq::Finite(w), 1e-10)?;
        println!("{k:>3}  {:>14.10}  {:>14.10}", r.dim(), root(k).log2());
    }
    Ok(())
}

fn root(k: usize) -> f64 {
    let p = |x: f64| (0..k).fold(x.powi(k as i32), |acc, j| acc - x.powi(j as i32));
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    for _ in 0..100 {
        let mid = (lo + hi) / 2.0;
        if p(mid) < 0.0 { lo = mid } else { hi = mid }
    }
    (lo + hi) / 2.0
}
