use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty digraph")]
    EmptyDigraph,
    #[error("digraph not in class: vertex {0} is incident to no arc")]
    NotInClass(usize),
    #[error("arc ({tail}, {head}) has an endpoint outside [0, {vertex_count})")]
    ArcOutOfRange {
        tail: usize,
        head: usize,
        vertex_count: usize,
    },
    #[error("empty sequence")]
    EmptySequence,
    #[error("father of vertex {vertex} is {father}, outside [0, {node_count})")]
    FatherOutOfRange {
        vertex: usize,
        father: usize,
        node_count: usize,
    },
    #[error("not a tree: vertex {0} does not reach the root")]
    NotATree(usize),
    #[error("mapping undefined for single vertex")]
    SingleVertexTree,
    #[error("inconsistent characteristics: {0}")]
    Inconsistent(String),
    #[error("infeasible case {0}")]
    InfeasibleCase(String),
    #[error("enumeration size exceeds cap: {size} > {cap}")]
    OverCap { size: usize, cap: usize },
    #[error("invalid shard {index}/{count}")]
    InvalidShard { index: usize, count: usize },
    #[error("{0}")]
    Unsupported(String),
}

pub(crate) fn inconsistent(msg: impl Into<String>) -> Error {
    Error::Inconsistent(msg.into())
}
