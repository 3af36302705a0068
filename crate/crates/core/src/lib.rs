//! Balanced graph cuts through st-MinCuts between local degree maxima.
//!
//! A balanced cut ("XCut") of a weighted undirected graph minimizes
//! `cut(S, S̄) / bal(S, S̄)` over vertex bipartitions, with the balancing term
//! chosen by [`CutKind`]: 1 for MinCut, `|S||S̄|` for RatioCut,
//! `vol(S)vol(S̄)` for NCut and `min(vol(S), vol(S̄))` for the Cheeger cut.
//!
//! Exact minimization is NP-hard. [`xist`] restricts the search to the
//! st-MinCut partitions between vertices whose weighted degree is a local
//! maximum, visiting them in a Gomory-Hu order so that `N` terminals cost
//! `N - 1` max-flow computations. [`multi_xist`] repeats that cut greedily to
//! produce `k` clusters, and [`oracle`] holds the exhaustive references used to
//! check both.
//!
//! ```
//! use xist::{build_graph, xist, CutKind};
//!
//! // two triangles joined by a light bridge
//! let g = build_graph(6, [
//!     (0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0),
//!     (3, 4, 1.0), (4, 5, 1.0), (3, 5, 1.0),
//!     (2, 3, 0.5),
//! ])?;
//! let run = xist(&g, CutKind::NCut)?;
//! assert_eq!(run.result.partition.to_vec(), vec![0, 1, 2]);
//! assert!((run.result.value - 0.5 / 42.25).abs() < 1e-15);
//! assert_eq!(run.flow_calls, 1);
//! # Ok::<(), xist::Error>(())
//! ```

pub mod cli;
pub mod cuts;
pub mod error;
pub mod flow;
pub mod graph;
pub mod ingest;
pub mod multixist;
pub mod oracle;
pub mod sweep;

pub use cuts::{
    balance, cut_weight, multiway_xcut_value, normalization_factor, normalized_xcut_value,
    xcut_value, CutKind, CutResult,
};
pub use error::{Error, Result};
pub use flow::{max_flow_value, st_min_cut, FlowNetwork, StMinCut};
pub use graph::{build_graph, build_graph_with_report, Edge, Subgraph, VertexSet, WeightedGraph};
pub use multixist::{cut_with, multi_xist, MultiXist, MultiXistRun, Terminals};
pub use sweep::{xist, xist_on_subset, xvst_basic, Xist, XistRun, XvstRun};
