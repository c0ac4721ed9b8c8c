use thiserror::Error;

/// Errors produced by the toolkit.
///
/// Edge indices and vertex ids carried by the variants are 1-based, matching
/// the file formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("edge {edge}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { edge: usize, vertex: usize, n: usize },
    #[error("edge {edge}: vertex {vertex} repeated")]
    RepeatedVertex { edge: usize, vertex: usize },
    #[error("edge {edge} is empty")]
    EmptyEdge { edge: usize },
    #[error("edge index {index} out of range 1..={m}")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("color of vertex {vertex} must be positive")]
    ZeroColor { vertex: usize },
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("hypergraph is not {0}-uniform")]
    WrongUniformity(usize),
    #[error("hypergraph is not 2-regular")]
    NotTwoRegular,
    #[error("input is not a graph (edge {edge} has {size} vertices)")]
    NotGraph { edge: usize, size: usize },
    #[error("vertex {vertex} has degree 0")]
    IsolatedVertex { vertex: usize },
    #[error("hypergraph is disconnected")]
    Disconnected,
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
