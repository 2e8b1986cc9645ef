//! Where the dimension drops to zero: `1 - 2τ` with `τ` the Thue–Morse constant.

use dyadic::calculus::{d_prefix, mirror_limit_real, thue_morse, tm_constant};
use dyadic::dimension::{phi, zero_threshold, zero_threshold_upper};
use dyadic::word::{w, word_to_fraction};

fn main() -> dyadic::Result<()> {
    let tau = tm_constant(64).to_f64();
    println!("thue-morse   {}", thue_morse(32));
    println!("tau          {tau:.15}");
    println!("1 - 2 tau    {:.15}", 1.0 - 2.0 * tau);
    println!("product      {:.15}", mirror_limit_real(1, 2, 1e-15)?);
    println!("d(1) prefix  {}", d_prefix(&w("1"), 32)?);
    println!("as a number  {:.15}", word_to_fraction(&d_prefix(&w("1"), 48)?).to_f64());
    for bits in [8, 16, 40] {
        println!(
            "bracket {bits:>2}   [{:.12}, {:.12}]",
            zero_threshold(bits)?.to_f64(),
            zero_threshold_upper(bits)?.to_f64()
        );
    }
    for x in ["1/6", "7/40", "9/50", "1/5"] {
        println!("dim({x}) = {:.10}", phi(&x.parse()?, 1e-10)?.dim());
    }
    Ok(())
}
