use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    InvalidRank(usize),
    #[error("level must be at least 1, got {0}")]
    InvalidLevel(usize),
    #[error("truncation must be a nonnegative rational, got {0}")]
    InvalidTruncation(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid root interval i={i}, j={j} for l={l}")]
    InvalidInterval { i: usize, j: usize, l: usize },
    #[error("vector {0} is not in the folded root lattice")]
    NotInFoldedLattice(String),
    #[error("malformed monomial: {0}")]
    MalformedMonomial(String),
    #[error("this oracle requires level 1, got {0}")]
    LevelOneOnly(usize),
    #[error("dictionary calibration failed: {0}")]
    Calibration(String),
    #[error("recursion inconsistency: {0}")]
    Recursion(String),
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("matrix is singular")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
