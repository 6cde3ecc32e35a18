use alloc::string::String;

use crate::graph::Label;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("label {0} is not a vertex")]
    MissingLabel(Label),
    #[error("vertex sets overlap at {0}")]
    Overlap(Label),
    #[error("map is not a bijection of the vertex set")]
    NotBijection,
    #[error("{0} vertices exceed the brute-force bound of {1}")]
    TooManyVertices(usize, usize),
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge set is not a spanning tree")]
    NotSpanningTree,
    #[error("not a tree")]
    NotTree,
    #[error("element is outside the carrier of {operad}: {reason}")]
    Carrier { operad: String, reason: String },
    #[error("arity {got} exceeds the bound {max}")]
    ArityBound { got: usize, max: usize },
    #[error("closure table is incomplete below arity {0}")]
    IncompleteTable(usize),
    #[error("leaf sets differ")]
    LeafMismatch,
    #[error("series precondition violated: {0}")]
    Series(&'static str),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
