use thiserror::Error;

use crate::ring::RingTag;

/// Errors raised by the sequence calculus.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("mixed rings: {0} and {1}")]
    MixedRing(RingTag, RingTag),

    #[error("{0} is not a unit")]
    NotAUnit(String),

    #[error("{value} is not divisible by {divisor}")]
    NotDivisible { value: String, divisor: String },

    #[error("bad constant term: expected {expected}, found {found}")]
    BadConstantTerm { expected: String, found: String },

    #[error("insufficient input: term {needed} required but only {available} available")]
    InsufficientInput { needed: usize, available: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("integrality violation: {0} is not an integer")]
    IntegralityViolation(String),

    #[error("{op} is not defined over the {ring} ring")]
    UnsupportedRing { op: &'static str, ring: RingTag },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
