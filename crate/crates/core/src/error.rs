use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("operation undefined on the empty graph")]
    EmptyGraph,

    #[error("graph is not a connected caterpillar")]
    NotACaterpillar,

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("density function never reaches {edges} edges with {k} subsets")]
    NoCertificate { edges: usize, k: usize },

    #[error("invalid 3-partition instance: {0}")]
    InvalidInstance(String),

    #[error("cover does not match the reduced instance: {0}")]
    MismatchedInstance(String),

    #[error("instance too large for exhaustive search: {0}")]
    SizeLimit(String),

    #[error("subsets {subsets:?} exceed the size cap {cap}")]
    CapViolation { subsets: Vec<usize>, cap: usize },

    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
