//! One line per acceptance criterion; exits non-zero if any fails.

use std::process::ExitCode;
use std::sync::Arc;

use dyadic::cli::checks::{run_one, CHECKS};
use dyadic::dimension::{Settings, SpectralCache};

fn main() -> ExitCode {
    let settings = Settings {
        cache: Some(Arc::new(SpectralCache::new())),
        ..Settings::default()
    };
    let mut failed = 0;
    for (n, _, _) in CHECKS {
        let report = run_one(&n.to_string(), &settings).expect("known criterion");
        println!("{}", report.line());
        failed += usize::from(!report.passed);
    }
    println!("acceptance: {} passed, {failed} failed", CHECKS.len() - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
