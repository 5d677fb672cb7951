use thiserror::Error;

/// Malformed textual input (coefficients, polynomials).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct ParseError {
    message: String,
}

impl ParseError {
    pub fn new(message: impl Into<String>) -> Self {
        ParseError { message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("ragged or empty matrix: {0}")]
    Shape(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("scaling polynomial must be monic")]
    NotMonic,
    #[error("scaling polynomial is not a multiple of the least common denominator {lcd}")]
    NotMultipleOfDenominator { lcd: String },
    #[error("grade {grade} is below the degree {degree}")]
    GradeBelowDegree { grade: i64, degree: i64 },
    #[error("grade must be at least 1, got {0}")]
    GradeTooSmall(i64),
    #[error("operation requires a nonzero matrix")]
    ZeroMatrix,
    #[error("matrix has non-polynomial entries")]
    NotPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    /// An extracted bundle violated one of its own invariants. Always a bug
    /// in an extractor.
    #[error("inconsistent structural data: {0}")]
    Inconsistent(String),
    #[error("malformed structural data: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("length mismatch: {0}")]
    LengthMismatch(String),
    #[error("index {index} outside 1..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("sequence {0:?} is not non-increasing")]
    NotMonotone(Vec<i64>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CompletionError {
    #[error("malformed prescription: {0}")]
    Malformed(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    /// Two independent evaluation routes disagreed. Always a bug.
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search space of {size} candidates exceeds the budget of {budget}")]
    BudgetExceeded { size: String, budget: u64 },
    #[error("oracle search needs a finite field, got {0}")]
    InfiniteField(String),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Completion(#[from] CompletionError),
    #[error("invalid search space: {0}")]
    Invalid(String),
}
