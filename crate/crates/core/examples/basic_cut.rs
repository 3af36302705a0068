//! Two-way balanced cuts of a small graph under every functional.
//!
//! ```text
//! cargo run --example basic_cut
//! ```

use xist::oracle::exact_xcut;
use xist::{build_graph, xist, xvst_basic, CutKind};

fn main() -> xist::Result<()> {
    // two triangles joined by a light bridge, plus a pendant vertex
    let g = build_graph(
        7,
        [
            (0, 1, 1.0),
            (1, 2, 1.0),
            (0, 2, 1.0),
            (3, 4, 1.0),
            (4, 5, 1.0),
            (3, 5, 1.0),
            (2, 3, 0.5),
            (5, 6, 0.8),
        ],
    )?;
    println!("local maxima: {:?}", g.local_maxima());
    println!(
        "{:<8} {:>12} {:>12} {:>12}  partition",
        "kind", "xist", "all pairs", "exact"
    );
    for kind in CutKind::ALL {
        let run = xist(&g, kind)?;
        let basic = xvst_basic(&g, kind, None)?;
        let exact = exact_xcut(&g, kind)?;
        println!(
            "{:<8} {:>12.6} {:>12.6} {:>12.6}  {:?} ({} flow calls vs {})",
            kind.name(),
            run.result.value,
            basic.result.value,
            exact.value,
            run.result.partition,
            run.flow_calls,
            basic.flow_calls,
        );
    }
    Ok(())
}
