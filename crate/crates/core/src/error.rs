use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("invalid size: {0}")]
    InvalidSize(String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("{0} and {1} are not adjacent")]
    NotAnEdge(usize, usize),

    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {0} is isolated; total domination is undefined")]
    IsolatedVertexPresent(usize),
    #[error("vertex {0} appears more than once in the sequence")]
    DuplicateVertex(usize),
    #[error("prefix is not a legal sequence (entry {position} adds nothing new)")]
    IllegalPrefix { position: usize },
    #[error("{n} vertices exceeds the limit of {limit} for this operation")]
    TooLarge { n: usize, limit: usize },
    #[error("memo table exceeded the configured cap of {cap_bytes} bytes")]
    ResourceLimit { cap_bytes: usize },
    #[error("deadline reached before the search finished")]
    TimedOut,
    #[error("no sequence found: {0}")]
    NotFound(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
