use thiserror::Error;

/// Errors raised by the library. Failures that are data (a rational function
/// that is not a polynomial, an IC candidate that does not factor) are
/// reported through return values, not through this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("unsupported cyclotomic order {0}")]
    UnsupportedOrder(u32),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(u64, u64),
    #[error("level mismatch: {0} vs {1}")]
    LevelMismatch(usize, usize),
    #[error("padding length {needed} required, got {given}")]
    PaddingTooShort { needed: usize, given: usize },
    #[error("charge is only defined for words of partition weight")]
    NonPartitionWeight,
    #[error("degenerate Gram matrix: zero pivot at {0}")]
    DegenerateGram(String),
    #[error("conjugation convention violated: {0} is not real")]
    NotReal(String),
    #[error("non-polynomial Hall function for {0}")]
    NonPolynomialHall(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("oracle scale exceeded: {0}")]
    OracleScale(String),
    #[error("IC extraction failed: {0}")]
    IcExtraction(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
