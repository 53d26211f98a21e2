use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("duplicate vertex line for vertex {0}")]
    DuplicateVertex(usize),
    #[error("missing vertex line for vertex {0}")]
    MissingVertex(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("negative {what} on vertex {vertex}")]
    Negative { what: &'static str, vertex: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("instance has {n} vertices, above the oracle cap of {cap}")]
    InstanceTooLarge { n: usize, cap: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("solver supports only the plain variant")]
    UnsupportedVariant,

    #[error("tree decomposition: vertex {0} is in no bag")]
    VertexNotCovered(usize),
    #[error("tree decomposition: edge {{{0}, {1}}} is in no bag")]
    EdgeNotCovered(usize, usize),
    #[error("tree decomposition: bags containing vertex {0} are not connected")]
    DisconnectedOccurrence(usize),
    #[error("tree decomposition: bag graph is not a tree")]
    BagTreeInvalid,
    #[error("tree decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("vertex set is not a vertex cover: edge {{{0}, {1}}} uncovered")]
    NotAVertexCover(usize, usize),
    #[error("vertex cover has {size} vertices, above the cap of {cap}")]
    CoverTooLarge { size: usize, cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid circuit: {0}")]
    InvalidCircuit(String),
}

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
