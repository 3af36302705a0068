//! Whitespace-separated edge lists in the SNAP style.
//!
//! One edge per line as `u v` or `u v w`; blank lines and lines starting with
//! `#` or `%` are skipped. Vertex ids are arbitrary nonnegative integers and
//! are remapped to `0..n` in ascending id order.

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{build_graph_with_report, BuildReport, Subgraph, WeightedGraph};

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    pub graph: WeightedGraph,
    /// `ids[v]` is the original id of dense vertex `v`.
    pub ids: Vec<u64>,
    pub report: BuildReport,
}

pub fn parse_edge_list(text: &str) -> Result<EdgeList> {
    let mut raw: Vec<(u64, u64, f64)> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('%') {
            continue;
        }
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&tokens.len()) {
            return Err(parse_err(format!(
                "expected `u v [w]`, found {} fields",
                tokens.len()
            )));
        }
        let id = |tok: &str| {
            tok.parse::<u64>()
                .map_err(|_| parse_err(format!("invalid vertex id `{tok}`")))
        };
        let (u, v) = (id(tokens[0])?, id(tokens[1])?);
        let w = match tokens.get(2) {
            Some(tok) => tok
                .parse::<f64>()
                .map_err(|_| parse_err(format!("invalid weight `{tok}`")))?,
            None => 1.0,
        };
        if !w.is_finite() || w < 0.0 {
            return Err(parse_err(format!(
                "weight must be finite and nonnegative, got {w}"
            )));
        }
        raw.push((u, v, w));
    }
    let mut dense: BTreeMap<u64, usize> = BTreeMap::new();
    for &(u, v, _) in &raw {
        dense.insert(u, 0);
        dense.insert(v, 0);
    }
    let ids: Vec<u64> = dense.keys().copied().collect();
    for (i, slot) in dense.values_mut().enumerate() {
        *slot = i;
    }
    let (graph, report) = build_graph_with_report(
        ids.len(),
        raw.iter().map(|&(u, v, w)| (dense[&u], dense[&v], w)),
    )?;
    Ok(EdgeList { graph, ids, report })
}

/// Writes `u v w` lines with round-trippable weights.
pub fn emit_edge_list(g: &WeightedGraph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.weight);
    }
    out
}

/// Induced subgraph on the largest connected component; ties go to the
/// component with the smallest vertex.
pub fn largest_component(g: &WeightedGraph) -> Subgraph {
    let comps = g.connected_components();
    let mut best: Option<&crate::graph::VertexSet> = None;
    for c in &comps {
        if best.is_none_or(|b| c.len() > b.len()) {
            best = Some(c);
        }
    }
    match best {
        Some(c) => g.restrict(c).expect("components are nonempty"),
        None => Subgraph {
            graph: g.clone(),
            to_parent: Vec::new(),
        },
    }
}
