use thiserror::Error;

use crate::exactnum::BigInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(BigInt),
    #[error("letter x{letter} is outside an alphabet of size {size}")]
    AlphabetMismatch { letter: usize, size: usize },
    #[error("expected {expected} arguments, got {found}")]
    Arity { expected: usize, found: usize },
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("not invertible by geometric series: {0}")]
    NotInvertible(String),
    #[error("group tag mismatch: {0} vs {1}")]
    TagMismatch(String, String),
    #[error("zero argument to {0}")]
    ZeroArgument(&'static str),
    #[error("element is not in {0}")]
    NotInSubset(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
