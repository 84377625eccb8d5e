use thiserror::Error;

/// Everything fallible in this crate reports through this enum.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field cardinality {cardinality} exceeds the configured limit {limit}")]
    FieldTooLarge { cardinality: u128, limit: u64 },
    #[error("modulus must be monic irreducible of degree {expected}, got {found}")]
    BadModulus { expected: u32, found: String },
    #[error("polynomial is reducible: {0}")]
    Reducible(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("the zero element has no multiplicative order")]
    ZeroElement,
    #[error("the zero polynomial has no order")]
    ZeroPolynomial,
    #[error("{0} is not primitive in its field")]
    NotPrimitive(String),
    #[error("gcd({q}, {n}) != 1")]
    NotCoprime { q: u64, n: u64 },
    #[error("scan exceeded {limit} iterations without finding the order")]
    ScanLimitExceeded { limit: u64 },
    #[error("enumeration size {size} exceeds the cap {cap}")]
    EnumerationCapExceeded { size: u128, cap: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("coefficient does not lie in the base field: {0}")]
    NotInBaseField(String),
    #[error("delta must satisfy 2 <= delta <= {max}, got {delta}")]
    DeltaOutOfRange { delta: u64, max: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cross-check failed: {0} (this is a bug, please report the inputs)")]
    CrossCheckMismatch(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
