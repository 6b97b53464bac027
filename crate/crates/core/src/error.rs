use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

/// Errors raised by graph construction, labeling, verification, and the
/// experiment harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(VertexId, VertexId),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} is unreachable from root {root}")]
    DisconnectedFromRoot { root: VertexId, vertex: VertexId },
    #[error("vertex {0} has odd degree; no Euler circuit exists")]
    OddDegree(VertexId),
    #[error("parallel edges {{{0}, {1}}} without an augmented copy")]
    ParallelRealEdges(VertexId, VertexId),
    #[error("label is not strictly positive: {0}")]
    NonPositiveLabel(String),
    #[error("malformed rational: {0}")]
    MalformedRational(String),
    #[error("duplicate label: {0}")]
    DuplicateLabel(String),
    #[error("label count mismatch: expected {expected}, got {got}")]
    LabelCountMismatch { expected: usize, got: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(VertexId),
    #[error("graph radius {0} exceeds 2")]
    RadiusExceeded(usize),
    #[error("assignment covers {got} edges but the graph has {expected}")]
    ArcCountMismatch { expected: usize, got: usize },
    #[error("arc endpoints do not match edge {0}")]
    ArcEndpointMismatch(EdgeId),
    #[error("instance too large for the exhaustive oracle: {edges} edges (max {max})")]
    OracleTooLarge { edges: usize, max: usize },
    #[error("probability must lie in [0, 1]")]
    ProbabilityOutOfRange,
    #[error("expectation formula requires n >= 2, got {0}")]
    TooFewVertices(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
