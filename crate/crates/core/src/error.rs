use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("node {node} out of range for graph with {n} nodes")]
    InvalidNode { node: usize, n: usize },
    #[error("invalid edge at line {line}: {reason}")]
    InvalidEdge { line: usize, reason: String },
    #[error("{metric} requires a directed graph")]
    DirectedRequired { metric: &'static str },
    #[error("{metric} requires an undirected graph")]
    UndirectedRequired { metric: &'static str },
    #[error("{metric} requires a connected graph")]
    Disconnected { metric: &'static str },
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },
    #[error("no convergence after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },
    #[error("matrix singular to working precision at pivot {pivot}")]
    Singular { pivot: usize },
    #[error("dense computation on {n} nodes exceeds cap {cap}")]
    DenseCapExceeded { n: usize, cap: usize },
    #[error("exact search on {n} nodes exceeds size cap {cap}")]
    SizeCapExceeded { n: usize, cap: usize },
    #[error("source and sink are the same node {node}")]
    SameSourceSink { node: usize },
    #[error("shortest-path count overflow")]
    PathCountOverflow,
    #[error("katz alpha {alpha} must be below 1/lambda_max = {bound}")]
    KatzAlphaTooLarge { alpha: f64, bound: f64 },
    #[error("{metric} requires node coordinates")]
    MissingCoordinates { metric: &'static str },
    #[error("assortativity undefined: zero degree variance")]
    UndefinedAssortativity,
    #[error("degenerate attribute column {name}: all values zero")]
    DegenerateAttribute { name: &'static str },
    #[error("baseline giant component is zero")]
    ZeroBaseline,
    #[error("empty seed set")]
    EmptySeedSet,
    #[error("{metric} produced a non-finite score at node {node}")]
    NonFinite { metric: String, node: usize },
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("unknown {kind} id {id:?}; valid ids: {valid}")]
    UnknownId { kind: &'static str, id: String, valid: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
