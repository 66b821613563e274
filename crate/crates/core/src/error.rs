use thiserror::Error;

/// Errors raised by constructors, sequence primitives and the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set must be nonempty (n >= 1)")]
    EmptyGroundSet,

    #[error("Catalan index {0} is a negative integer")]
    NegativeCatalanIndex(i64),

    #[error("Fibonacci index {0} is below -1")]
    FibonacciIndex(i64),

    #[error("invalid set partition: {0}")]
    InvalidPartition(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid Dyck path: {0}")]
    InvalidDyckPath(String),

    #[error("invalid c-sequence: {0}")]
    InvalidCSeq(String),

    #[error("invalid (K, L, inner) triple: {0}")]
    InvalidTriple(String),

    #[error("unsupported pattern {0}")]
    UnsupportedPattern(String),

    #[error("outside the domain of the map: {0}")]
    Domain(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
