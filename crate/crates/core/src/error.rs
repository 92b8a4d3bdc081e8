use thiserror::Error;

use crate::graph::{ColorViolation, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bit vector lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("bit vector length must be in 1..=64, got {0}")]
    BadLength(usize),

    #[error("cannot infer code length from an empty vector list")]
    EmptyLength,

    #[error("code dimension {0} is too large to enumerate (limit 24)")]
    DimensionTooLarge(usize),

    #[error("invalid bitstring {0:?}")]
    BadBitstring(String),

    #[error("code contains codeword {codeword} of weight {weight}")]
    LowWeightCodeword { codeword: String, weight: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("coloring is not regular ({} violation(s))", .0.len())]
    NonRegular(Vec<ColorViolation>),

    #[error("coloring does not have the quadrilateral property")]
    NotQuadrilateral,

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("invalid walk: {0}")]
    InvalidWalk(String),

    #[error("graph has no boson/fermion assignment")]
    MissingParity,

    #[error("graph has no height assignment")]
    MissingHeights,

    #[error("edge {0}-{1} does not join vertices at adjacent heights")]
    HeightGap(Vertex, Vertex),

    #[error("height of vertex {0} disagrees with the boson/fermion level structure")]
    ParityLevelConflict(Vertex),

    #[error("vertex {0} cannot be moved {1}")]
    NotMovable(Vertex, &'static str),

    #[error("sign assignment covers {got} edges, graph has {expected}")]
    IncompleteAssignment { expected: usize, got: usize },

    #[error("adjacency list is not symmetric: {0}")]
    Asymmetric(String),

    #[error("malformed adjacency list: {0}")]
    MalformedRectangle(String),

    #[error("unknown format {0:?}")]
    UnknownFormat(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
