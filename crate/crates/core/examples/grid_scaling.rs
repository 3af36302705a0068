//! Wall time of one Xist cut on growing image grids, with the fitted log-log
//! slope against the number of pixels.
//!
//! ```text
//! cargo run --release --example grid_scaling
//! ```

use std::time::Instant;

use xist::ingest::{image_grid_graph, GrayImage};
use xist::{cut_with, CutKind, Terminals};

fn main() -> xist::Result<()> {
    let img = GrayImage::synthetic(128)?;
    let mut points = Vec::new();
    println!(
        "{:>4} {:>6} {:>7} {:>6} {:>11}",
        "r", "n", "m", "flows", "seconds"
    );
    for r in [8, 12, 16, 24, 32, 48, 64, 96, 128] {
        let ig = image_grid_graph(&img, r)?;
        let mut best = f64::INFINITY;
        let mut flows = 0;
        for _ in 0..5 {
            let start = Instant::now();
            flows = cut_with(&ig.graph, CutKind::NCut, &Terminals::LocalMaxima)?.flow_calls;
            best = best.min(start.elapsed().as_secs_f64());
        }
        println!(
            "{r:>4} {:>6} {:>7} {flows:>6} {best:>11.3e}",
            ig.graph.n(),
            ig.graph.m()
        );
        points.push(((ig.graph.n() as f64).ln(), best.ln()));
    }
    let k = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / k;
    let my = points.iter().map(|p| p.1).sum::<f64>() / k;
    let slope = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
        / points.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    println!("log-log slope vs n: {slope:.2}");
    Ok(())
}
