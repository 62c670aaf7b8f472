use alloc::string::String;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("word is not a permutation of 1..{n}")]
    NotABijection { n: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("two-line array is not in lexicographic order at position {position}")]
    NotLexSorted { position: usize },

    #[error("tableau shapes differ")]
    ShapeMismatch,

    #[error("recording tableau admits no valid un-insertion order")]
    NotARecordingTableau,

    #[error("matrix of {rows}x{cols} cannot hold pair ({u}, {v})")]
    DimsTooSmall {
        rows: usize,
        cols: usize,
        u: usize,
        v: usize,
    },

    #[error("{what}: size {requested} exceeds guard {limit}")]
    GuardExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("ground sets differ in size ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },

    #[error("truncation degrees differ ({left} vs {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("expected an integer result but got {0}")]
    NonIntegerResult(String),

    #[error("relation is not a strict partial order: {0}")]
    InvalidPoset(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
