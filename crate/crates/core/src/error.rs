use crate::graph::EdgeRef;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("{0} is not an edge of the graph")]
    NotAnEdge(EdgeRef),

    #[error("{what} cap exceeded: {actual} > {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        actual: usize,
    },

    #[error("point has {actual} coordinates, graph has {expected} vertices")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("partition column must contain a positive entry")]
    ZeroColumn,

    #[error("non-integer coefficient at {0}")]
    NonIntegerCoefficient(String),

    #[error("inconsistent monomial coefficients at type {0}: not signed-symmetric")]
    NotSignedSymmetric(String),

    #[error("interpolation failed: {0}")]
    Interpolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
