//! Reduction chains down to `01` and the bridges that glue each system to the golden one.

use dyadic::calculus::{accumulate_a, accumulate_b, bridge_to_01, p_chain_to_01};
use dyadic::dimension::{e1_minimal_words, phi};
use dyadic::word::{w, Seq};

fn main() -> dyadic::Result<()> {
    for c in e1_minimal_words(7) {
        let chain: Vec<String> = p_chain_to_01(&c)?.iter().map(ToString::to_string).collect();
        println!("{c:<8} chain {}   bridge {}", chain.join(" -> "), bridge_to_01(&c)?);
    }
    let c = w("001");
    let base = phi(&Seq::Finite(c.clone()), 1e-10)?.dim();
    for k in 1..=4 {
        let a = accumulate_a(&c, k)?;
        let b = accumulate_b(&c, k)?;
        let (da, db) = (phi(&Seq::Finite(a.clone()), 1e-10)?.dim(), phi(&Seq::Finite(b.clone()), 1e-10)?.dim());
        println!("k = {k}: a = {a} dim {da:.8}, b = {b} dim {db:.8}, plateau {base:.8}");
    }
    Ok(())
}
