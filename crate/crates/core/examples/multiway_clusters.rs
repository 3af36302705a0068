//! k-way clustering of a planted partition graph.
//!
//! Four dense groups of eight vertices with sparse links between them. The
//! greedy loop always realizes the cheapest pending split, so the trace shows
//! which group is peeled off next and at what normalized cost.
//!
//! ```text
//! cargo run --example multiway_clusters
//! ```

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use xist::{build_graph, multi_xist, CutKind};

fn main() -> xist::Result<()> {
    let (groups, size) = (4, 8);
    let n = groups * size;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            let p = if u / size == v / size { 0.7 } else { 0.02 };
            if rng.random_bool(p) {
                edges.push((u, v, rng.random_range(0.5..1.5)));
            }
        }
    }
    let g = build_graph(n, edges)?;
    for k in 2..=5 {
        let run = multi_xist(&g, CutKind::NCut, k)?;
        println!(
            "k = {k}: multiway NCut {:.4}, {} flow calls",
            run.value, run.flow_calls
        );
        for step in &run.steps {
            println!(
                "  split slot {} at cost {:.3e} into {:?}",
                step.slot, step.cost, step.sizes
            );
        }
        let labels: String = run
            .labels
            .iter()
            .map(|l| char::from(b'0' + *l as u8))
            .collect();
        println!("  labels {labels}");
    }
    Ok(())
}
