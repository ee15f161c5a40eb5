use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("uniformity must be at least 1, got {0}")]
    Uniformity(usize),

    #[error("at most {max} vertices are supported, got {got}")]
    TooManyVertices { got: usize, max: usize },

    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge:?} does not have exactly {k} distinct vertices")]
    BadEdge { edge: Vec<usize>, k: usize },

    #[error("expected a {expected}-uniform hypergraph, got {got}-uniform")]
    UniformityMismatch { expected: usize, got: usize },

    #[error("vertex set of size {size} is too large here (limit {limit})")]
    SetTooLarge { size: usize, limit: usize },

    #[error("coloring arity {got} does not match the required arity {expected}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("coloring is defined on {got} vertices, hypergraph has {expected}")]
    VertexCountMismatch { expected: usize, got: usize },

    #[error("color count must be at least 1")]
    NoColors,

    #[error("enumeration of 2^{exponent} labeled instances exceeds the cap 2^{cap}")]
    EnumerationTooLarge { exponent: usize, cap: usize },

    #[error("search budget of {0} nodes exhausted")]
    BudgetExceeded(u64),

    #[error("Ramsey number R_{s}({k}) is not known to this table")]
    RamseyUnknown { s: usize, k: usize },

    #[error("missing coloring for the (k-2)-set {0:?}")]
    MissingColoring(Vec<usize>),

    #[error("input coloring for {0:?} is not proper or does not restrict properly")]
    ImproperInput(Vec<usize>),

    #[error("graph is not triangle-free: {0:?}")]
    NotTriangleFree([usize; 3]),

    #[error("invalid sector sizes: {0}")]
    SectorSizes(String),

    #[error("{kind} example needs at least {min} vertices, got {n}")]
    TooFewVertices { kind: &'static str, min: usize, n: usize },

    #[error("implication {0} violated; this is a bug in a classifier")]
    ImplicationViolated(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown {what} `{name}`")]
    Unknown { what: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;
