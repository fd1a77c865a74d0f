use thiserror::Error;

/// Errors raised by group construction, structural queries and the arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclic group order must be at least 1")]
    ZeroOrder,

    #[error("group too large: {size} elements exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },

    #[error("not a permutation of 0..{degree}: {images:?}")]
    NotAPermutation { degree: usize, images: Vec<usize> },

    #[error("generator has degree {found}, expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{p} does not divide the group order {n}")]
    NotADivisor { p: u64, n: u64 },

    #[error("exponent k must be at least 1")]
    ZeroExponent,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
