use thiserror::Error;

/// Errors raised by the group, coset, algebra and representation layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("group closure exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation of degree {found} used where degree {expected} was expected")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{0} is not an element of the group")]
    NotAMember(String),

    #[error("operands belong to different (G, H) pairs")]
    PairMismatch,

    #[error("cycle notation error at column {column}: {message}")]
    CycleSyntax { column: usize, message: String },

    #[error("point {point} at column {column} is outside 1..={degree}")]
    PointOutOfRange { column: usize, point: usize, degree: usize },

    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },

    #[error("power iteration did not converge within {iterations} iterations")]
    NoConvergence { iterations: usize },

    #[error("malformed coefficient data: {0}")]
    Codec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
