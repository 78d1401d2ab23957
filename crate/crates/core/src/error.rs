use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },

    #[error("vertex {vertex} out of range 1..={n_vertices}")]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("graph must have at least one vertex")]
    NoVertices,

    #[error("hex string has {bits} bits but {needed} are required")]
    HexTooShort { bits: usize, needed: usize },

    #[error("hex string has nonzero bits outside the upper triangle")]
    HexExcessBits,

    #[error("invalid hex character {0:?}")]
    HexDigit(char),

    #[error("invalid graph6 data: {0}")]
    Graph6(String),

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("size mismatch: expected {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },

    #[error("subset {0:?} is invalid: {1}")]
    InvalidSubset(Vec<usize>, String),

    #[error("rank {rank} out of range 1..={size}")]
    RankOutOfRange { rank: usize, size: usize },

    #[error("level {level} out of range {min}..={max}")]
    LevelOutOfRange {
        level: usize,
        min: usize,
        max: usize,
    },

    #[error("matrix is not a 0/1 adjacency matrix with zero diagonal")]
    NotAdjacency,

    #[error("matrix is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("{what}: {actual} exceeds the limit of {limit}{hint}")]
    Guard {
        what: &'static str,
        actual: u128,
        limit: u128,
        hint: String,
    },
}

impl Error {
    /// Size-limit refusals, as opposed to bad input.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::Guard { .. })
    }

    pub(crate) fn guard(what: &'static str, actual: u128, limit: u128) -> Self {
        Error::Guard {
            what,
            actual,
            limit,
            hint: String::new(),
        }
    }
}
