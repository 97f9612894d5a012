use thiserror::Error;

use crate::coalition::Rejection;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRangeVertex { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("edge index {index} out of range (m = {m})")]
    EdgeIndexOutOfRange { index: usize, m: usize },
    #[error("edge set over {found} edges used with a graph of {expected} edges")]
    GraphMismatch { expected: usize, found: usize },
    #[error("edge set must be nonempty")]
    EmptySet,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("not an ec-partition: {0}")]
    NotAnEcPartition(Rejection),
    #[error("block index {index} out of range ({blocks} blocks)")]
    BlockIndexOutOfRange { index: usize, blocks: usize },
    #[error("graph has no edges; the edge coalition number is undefined")]
    EmptyGraph,
    #[error("{m} edges exceeds the exact search cap of {cap}")]
    BudgetExceeded { m: usize, cap: usize },
    #[error("search budget exhausted before any ec-partition was found")]
    TimeBudgetExhausted,
    #[error("{n} vertices exceeds the isomorphism cap of {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
    #[error("graph is not a tree")]
    NotATree,
    #[error("graph is not unicyclic")]
    NotUnicyclic,
    #[error("invalid family spec: {0}")]
    InvalidSpec(String),
    #[error("{m} edges is too many for brute force (max {max})")]
    TooManyEdges { m: usize, max: usize },
    #[error("corpus budget of {0} graphs exceeded")]
    CorpusBudgetExceeded(usize),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}
