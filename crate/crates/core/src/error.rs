use thiserror::Error;

use crate::graph::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge ({u}, {v}) has negative weight {weight}")]
    NegativeWeight { u: usize, v: usize, weight: f64 },

    #[error("edge ({u}, {v}) has non-finite weight")]
    NonFiniteWeight { u: usize, v: usize },

    #[error("vertex set is empty")]
    EmptySet,

    #[error("scale factor must be positive and finite, got {0}")]
    NonPositiveScale(f64),

    #[error("source and sink are the same vertex {0}")]
    SameVertex(usize),

    #[error("partition must be a nonempty proper subset of the vertex set")]
    DegeneratePartition,

    #[error("balancing term is zero for this partition")]
    ZeroBalance,

    #[error("parts do not form a partition of the vertex set: {0}")]
    NotAPartition(String),

    #[error("only one local maximum; retry with all vertices as terminals")]
    DegenerateVloc,

    #[error("terminal set needs at least two vertices, got {0}")]
    SubsetTooSmall(usize),

    #[error("cannot split {n} vertices into {k} clusters")]
    TooManyClusters { k: usize, n: usize },

    #[error("no further split possible after {} clusters", clusters.len())]
    UnreachableK { clusters: Vec<VertexSet> },

    #[error("exhaustive enumeration limited to {max} vertices, got {n}")]
    TooLarge { n: usize, max: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("bad grid size {r} for {width}x{height} image")]
    BadGrid {
        r: usize,
        width: usize,
        height: usize,
    },

    #[error("bad image: {0}")]
    BadImage(String),

    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),

    #[error("label vectors differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),

    #[error("label {0} outside {{0, 1}}")]
    InvalidLabel(usize),
}
