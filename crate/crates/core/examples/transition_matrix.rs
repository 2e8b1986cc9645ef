//! The window system of a word: states, edges and growth counts.

use dyadic::sft::{build_sft, count_words, sccs, spectral_radius};
use dyadic::word::w;

fn main() -> dyadic::Result<()> {
    let c = w("00011");
    let ts = build_sft(&c)?;
    println!("window {} with {} states, {} edges", ts.window_len(), ts.state_count(), ts.edge_count());
    for i in 0..ts.state_count() {
        let next: Vec<String> = ts.successors(i).map(|j| ts.state_word(j).to_string()).collect();
        println!("  {} -> {}", ts.state_word(i), next.join(" "));
    }
    let comps = sccs(&ts);
    println!("{} strongly connected components", comps.len());
    let rho = spectral_radius(&ts, 1e-12)?;
    println!("rho in [{:.12}, {:.12}]", rho.lower, rho.upper);
    for n in [8, 16, 32, 64] {
        let count = count_words(&c, n)?;
        println!("n = {n:>2}: {count} words");
    }
    let json = ts.export_json();
    println!("json export: {} bytes", json.len());
    Ok(())
}
