use thiserror::Error;

use crate::digraph::{Color, Vertex};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid digraph: {0}")]
    InvalidDigraph(String),

    #[error("not a tournament: pair {{{u}, {v}}} {reason}")]
    NotTournament {
        u: Vertex,
        v: Vertex,
        reason: &'static str,
    },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },

    #[error("color {color} out of range for {m} colors")]
    ColorOutOfRange { color: Color, m: usize },

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("{what} refused: {actual} exceeds the limit of {limit}")]
    GuardExceeded {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("digraph contains a cycle through vertex {0}")]
    Cyclic(Vertex),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid RPOG instance: {0}")]
    InvalidRpog(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("reduction chain mismatch: {0}")]
    ChainMismatch(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for refusals caused by a size guard rather than bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::GuardExceeded { .. })
    }
}
