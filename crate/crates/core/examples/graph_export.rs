//! Plateau table as CSV plus the step plot, written to a temporary directory.

use dyadic::cli::{graph_csv, render_svg};
use dyadic::dimension::{coverage, plateaus, Settings};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let csv = graph_csv(6, 2, 2, &Settings::default())?;
    print!("{csv}");
    let dir = std::env::temp_dir();
    std::fs::write(dir.join("plateaus.csv"), &csv)?;
    std::fs::write(dir.join("plateaus.svg"), render_svg(&csv))?;
    println!("wrote plateaus.csv and plateaus.svg to {}", dir.display());
    println!("coverage at length 8: {:.12}", coverage(&plateaus(8, 1)?));
    Ok(())
}
