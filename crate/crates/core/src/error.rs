use alloc::string::String;

use thiserror::Error;

/// A rational literal that failed to parse.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point list")]
    EmptyInput,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("expected affine rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("inequality has an all-zero coefficient vector")]
    ZeroNormal,
    #[error("matrix is not a signed permutation matrix")]
    NotOrthogonal,
    #[error("degenerate input: affine rank {0} is too small")]
    Degenerate(usize),
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("point {index} is not a vertex: {witness}")]
    NotAVertex { index: usize, witness: String },
    #[error("index {index} out of range (len {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("origin is not interior after centering")]
    OriginNotInterior,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("search exhausted: {0}")]
    Exhausted(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub type Result<T> = core::result::Result<T, Error>;
