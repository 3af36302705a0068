//! Edge-list ingestion: parse, keep the largest component, cut, and map the
//! result back to the original vertex ids.
//!
//! ```text
//! cargo run --example edge_list [path]
//! ```
//!
//! Without a path a small network with sparse ids, a comment header and a
//! stray component is used.

use xist::ingest::{largest_component, parse_edge_list};
use xist::{cut_with, CutKind, Terminals};

const SAMPLE: &str = "\
# FromNodeId ToNodeId
101 102
101 103
102 103
103 104
104 105
104 106
105 106
105 107
106 107
107 108
108 109
108 110
109 110
900 901
";

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => SAMPLE.to_string(),
    };
    let parsed = parse_edge_list(&text)?;
    println!(
        "{} vertices, {} edges ({} duplicates merged, {} self-loops dropped)",
        parsed.graph.n(),
        parsed.graph.m(),
        parsed.report.duplicates_merged,
        parsed.report.self_loops_dropped
    );
    let component = largest_component(&parsed.graph);
    println!("largest component: {} vertices", component.graph.n());
    for kind in CutKind::BALANCED {
        let sweep = cut_with(&component.graph, kind, &Terminals::LocalMaxima)?;
        let side: Vec<u64> = sweep
            .result
            .partition
            .iter()
            .map(|v| parsed.ids[component.to_parent[v]])
            .collect();
        println!(
            "{:<8} {:.4e}  side {:?}",
            kind.name(),
            sweep.result.value,
            side
        );
    }
    Ok(())
}
