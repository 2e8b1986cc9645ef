//! Shift-boundedness, level, minimal prefix and reduction chain for a few words.

use dyadic::cli::classify;
use dyadic::word::w;

fn main() -> dyadic::Result<()> {
    for s in ["001", "000111", "0011", "001011", "00101101", "0001", "011", "1"] {
        println!("{}", classify(&w(s))?.text());
    }
    Ok(())
}
