use thiserror::Error;

/// Errors raised by field arithmetic, code construction and the harness.
///
/// Decoding failures are not errors: they are reported as values through
/// [`crate::decoder::DecodeOutcome`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("elements are linearly dependent over the prime field")]
    DependentSpan,
    #[error("characteristic {0} is not supported (an odd prime is required)")]
    UnsupportedCharacteristic(u32),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("message entry {index} does not lie in the subfield F_(q^n)")]
    MessageNotInSubfield { index: usize },
    #[error("word is not a codeword")]
    NotACodeword,
    #[error("evaluation points are linearly dependent over the prime field")]
    DependentEvaluationPoints,
    #[error("index out of range: {0}")]
    IndexError(String),
    #[error("the trace-augmented system needs an even dimension parameter k")]
    LimitCaseInapplicable,
    #[error("enumeration of {needed} codewords exceeds the oracle budget of {budget}")]
    OracleBudgetExceeded { needed: u128, budget: u128 },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
