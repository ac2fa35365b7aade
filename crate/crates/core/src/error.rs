use thiserror::Error;

use crate::ring::Symbol;

/// Errors raised by the exact coefficient ring.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("denominator involves more than one symbol ({0:?} and {1:?})")]
    MultivariateDenominator(Symbol, Symbol),
    #[error("gcd input is not univariate in a common symbol")]
    MultivariateInput,
    #[error("series order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("operator term raises x-degree by {0}; at most 1 is supported")]
    UnsupportedXPower(u32),
    #[error("no classical limit for {0}")]
    NoClassicalLimit(String),
}

/// Errors raised by the combinatorial and symmetric-function layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("partition sizes differ: |{0}| != |{1}|")]
    SizeMismatch(String, String),
    #[error("partition of size {size} exceeds degree cap {cap}")]
    DegreeCapExceeded { size: usize, cap: usize },
    #[error("bad constant term: expected {expected}")]
    BadConstantTerm { expected: &'static str },
    #[error("closed genus-0 formula needs at least 3 parts, got {0}")]
    LengthTooSmall(usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}
