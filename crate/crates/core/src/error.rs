use thiserror::Error;

/// Errors raised by constructors, solvers and constructions in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arc ({0}, {0}) is a loop")]
    Loop(usize),
    #[error("arc ({u}, {v}) has an endpoint outside 0..{order}")]
    EndpointOutOfRange { u: usize, v: usize, order: usize },
    #[error("arc ({0}, {1}) is listed more than once")]
    DuplicateArc(usize, usize),
    #[error("{0} vertices requested; at most {max} are supported", max = crate::MAX_ORDER)]
    TooManyVertices(usize),
    #[error("{0} is not a vertex of the digraph")]
    InvalidVertex(usize),
    #[error("({0}, {1}) is not an arc of the digraph")]
    NotAnArc(usize, usize),
    #[error("the digraph has no vertices")]
    EmptyDigraph,
    #[error("the vertex set is empty")]
    EmptyVertexSet,
    #[error("the arc set is empty")]
    EmptyArcSet,
    #[error("the digraph has no arcs")]
    NoArcs,
    #[error(
        "the digraph is not strong; a strong in-domatic partition exists if and only if the digraph is strong"
    )]
    NotStrong,
    #[error("block count {k} is outside 1..={order}")]
    BlockCountOutOfRange { k: usize, order: usize },
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("the graph is disconnected")]
    Disconnected,
    #[error("the graph needs at least two vertices")]
    TrivialGraph,
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
