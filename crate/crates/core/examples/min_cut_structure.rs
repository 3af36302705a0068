//! The exhaustive property suite: Xist against brute-force enumeration, the
//! flow-call bound, and the structural facts about s-t min cuts.
//!
//! ```text
//! cargo run --release --example min_cut_structure [trials] [seed]
//! ```

use xist::oracle::{property_suite, SuiteConfig};

fn main() -> xist::Result<()> {
    let mut args = std::env::args().skip(1);
    let trials = args.next().and_then(|a| a.parse().ok()).unwrap_or(200);
    let seed = args.next().and_then(|a| a.parse().ok()).unwrap_or(0);
    let report = property_suite(&SuiteConfig {
        trials,
        seed,
        ..Default::default()
    })?;
    for p in &report.properties {
        println!(
            "{:<34} {:>5} checked {:>3} violations",
            p.name, p.checked, p.violations
        );
    }
    if report.violations() > 0 {
        std::process::exit(1);
    }
    Ok(())
}
