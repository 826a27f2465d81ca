use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Gram matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("polygon size n = {0} is out of range")]
    BadN(usize),
    #[error("m = {0} is not a square-free positive integer")]
    MNotSquarefree(u64),
    #[error("value too large for 64-bit factorization: {0}")]
    ValueTooLarge(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("two edge vectors point in the same direction")]
    DuplicateDirection,
    #[error("coordinates are not all divisible by {0}")]
    NotDivisible(u64),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("f-map parameters must not both be zero")]
    DegenerateFMap,
    #[error("budget exhausted: {0}")]
    BudgetExhausted(String),
    #[error("corpus row {line} is corrupt: {reason}")]
    CorpusCorrupt { line: usize, reason: String },
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
