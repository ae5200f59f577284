use thiserror::Error;

/// Errors raised by graph construction, evaluation and the transformation rules.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("index is undefined for a single vertex (eccentricity 0)")]
    SingleVertex,
    #[error("graph is not a tree")]
    NotATree,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{rule}: precondition violated: {reason}")]
    Precondition { rule: &'static str, reason: String },
    #[error("{rule} broke monotonicity: {detail}")]
    Monotonicity { rule: &'static str, detail: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn from_io(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition(rule: &'static str, reason: impl Into<String>) -> Error {
    Error::Precondition {
        rule,
        reason: reason.into(),
    }
}
