//! Foreground/background split of a synthetic grayscale image.
//!
//! The image is block-averaged onto an r × r grid whose 8-neighborhood edges
//! carry the product of the two intensities. Cutting with degree maxima and
//! with intensity maxima as terminals gives two segmentations, printed as
//! ASCII masks.
//!
//! ```text
//! cargo run --release --example image_segmentation [r]
//! ```

use xist::ingest::{image_grid_graph, GrayImage};
use xist::{cut_with, CutKind, Terminals};

fn main() -> xist::Result<()> {
    let r: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(24);
    let img = GrayImage::synthetic(96)?;
    let ig = image_grid_graph(&img, r)?;
    println!(
        "{r}x{r} grid: {} edges, {} degree maxima, {} intensity maxima",
        ig.graph.m(),
        ig.graph.local_maxima().len(),
        ig.intensity_maxima.len()
    );
    for (name, terminals) in [
        ("degree", Terminals::LocalMaxima),
        ("intensity", Terminals::Fixed(ig.intensity_maxima.clone())),
    ] {
        let sweep = cut_with(&ig.graph, CutKind::NCut, &terminals)?;
        println!(
            "\n{name} terminals: NCut {:.3e}, {} flow calls",
            sweep.result.value, sweep.flow_calls
        );
        let s = &sweep.result.partition;
        for y in 0..r {
            let row: String = (0..r)
                .map(|x| if s.contains(y * r + x) { '#' } else { '.' })
                .collect();
            println!("{row}");
        }
    }
    Ok(())
}
