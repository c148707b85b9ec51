use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {limit} vertices, got {n}")]
    TooManyVertices { n: usize, limit: usize },

    #[error("{operation}: order {n} exceeds the supported limit of {limit}")]
    UnsupportedSize {
        operation: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("{operation}: precondition violated: {reason}")]
    Precondition {
        operation: &'static str,
        reason: String,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn precondition<T>(operation: &'static str, reason: impl Into<String>) -> Result<T> {
    Err(Error::Precondition {
        operation,
        reason: reason.into(),
    })
}
