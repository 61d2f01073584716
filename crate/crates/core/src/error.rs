use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph must have between 1 and 64 vertices, got {0}")]
    BadVertexCount(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} is not a cut vertex")]
    NotCutVertex(usize),
    #[error("graph has no cut vertex")]
    NoCutVertex,
    #[error("vertex set is not a block of the graph")]
    NotABlock,
    #[error("{edges} edges exceed the brute-force limit of {limit}")]
    TooManyEdges { edges: usize, limit: usize },
    #[error("block with {edges} edges exceeds the brute-force block limit of {limit}")]
    BlockTooLarge { edges: usize, limit: usize },
    #[error("block expansion over {0} cut vertices is too large")]
    ExpansionTooLarge(usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("special vertex {tag} is not defined for {family}")]
    UnknownTag { family: String, tag: String },
    #[error("cannot parse family spec {0:?}")]
    FamilySyntax(String),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error("n = {n} exceeds the search cap of {cap}")]
    OverCap { n: usize, cap: usize },
    #[error("unknown theorem id {0:?}")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
