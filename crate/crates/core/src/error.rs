use thiserror::Error;

use crate::word::Word;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid letter {0:?}: words are over the alphabet {{1, 2}}")]
    InvalidLetter(char),
    #[error("index {index} out of range for word of length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("parameter must be positive, got {0}")]
    NonPositiveParameter(f64),
    #[error("zero is not an admissible automorphism parameter")]
    ZeroParameter,
    #[error("unsupported automorphism: {0}")]
    UnsupportedAutomorphism(String),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("decomposition does not reconstruct the element")]
    DecompositionMismatch,
    #[error("expected {expected} factors, got {got}")]
    FactorCount { expected: usize, got: usize },
    #[error("a nonzero derivation requires nonnegative exponents")]
    NegativeExponentWithDerivation,
    #[error("negative exponent {0} is not allowed here")]
    NegativeExponent(i64),
    #[error("derivation violates the twisted Leibniz rule at ({0}, {1})")]
    InvalidDerivation(String, String),
    #[error("word {0} is not a power of x1")]
    NotSingleVariable(Word),
    #[error("coefficient {0} is not real")]
    NonRealCoefficient(String),
    #[error("cannot certify: {0}")]
    CannotCertify(String),
    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("expression exceeds truncation caps: {0}")]
    CapOverflow(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub(crate) fn check_positive(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositiveParameter(x))
    }
}
