//! Points with no finite minimal prefix: certified brackets at the level thresholds.

use dyadic::calculus::e_threshold;
use dyadic::dimension::{dim_bounds, phi};
use dyadic::word::Seq;

fn main() -> dyadic::Result<()> {
    for i in 1..=3 {
        let e = e_threshold(i)?;
        let c = Seq::from(e.clone());
        for n in [8, 12, 16] {
            let (lo, hi) = dim_bounds(&c, n, 1e-10)?;
            println!("e_{i} = {e}  n = {n:>2}  dim in [{lo:.6}, {hi:.6}]");
        }
        let r = phi(&c, 1e-10)?;
        println!("e_{i} default  dim in [{:.6}, {:.6}]", r.dim_lower, r.dim_upper);
    }
    Ok(())
}
