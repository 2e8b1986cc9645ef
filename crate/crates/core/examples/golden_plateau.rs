//! The plateau of `001`: every point in `[3/28, 1/7]` has dimension `log2` of the golden ratio.

use dyadic::dimension::{interval, phi};
use dyadic::word::Seq;

fn main() -> dyadic::Result<()> {
    let p = interval(&"001".parse()?, 1e-10)?;
    println!("plateau [{}, {}] = [{}, {}]", p.left, p.right, p.left_word, p.right_word);
    println!("dim {:.12} in [{:.12}, {:.12}]", p.dim, p.dim_lower, p.dim_upper);
    println!("log2 golden {:.12}", ((1.0 + 5f64.sqrt()) / 2.0).log2());
    for x in ["3/28", "1/8", "000111", "0010001", "1/7"] {
        let c: Seq = x.parse()?;
        println!("{x:>8} -> {:.10}", phi(&c, 1e-10)?.dim());
    }
    Ok(())
}
