//! Substituting into `01` blocks halves the dimension and takes a square root of the growth rate.

use dyadic::calculus::{mu_inverse, f_power_of_one};
use dyadic::dimension::{e1_minimal_words, phi};
use dyadic::sft::{build_sft, spectral_radius};
use dyadic::word::Seq;

fn main() -> dyadic::Result<()> {
    let u = f_power_of_one(1);
    for c in e1_minimal_words(6) {
        let x = mu_inverse(&c, &u)?;
        let (d1, d2) = (phi(&Seq::Finite(c.clone()), 1e-10)?.dim(), phi(&Seq::Finite(x.clone()), 1e-10)?.dim());
        let (r1, r2) = (spectral_radius(&build_sft(&c)?, 1e-12)?, spectral_radius(&build_sft(&x)?, 1e-12)?);
        println!(
            "{c:<8} {x:<14} dim {d1:.8} / {d2:.8}   rho {:.8} sqrt {:.8}",
            r2.midpoint(),
            r1.midpoint().sqrt()
        );
    }
    Ok(())
}
