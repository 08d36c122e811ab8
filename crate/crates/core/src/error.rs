use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("point is outside the Gelfand-Zetlin polytope")]
    PointOutside,
    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no efficient enhancement with these circles: {0}")]
    ReconstructionInvalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}
