use thiserror::Error;

use crate::group::MklParams;

/// A hypothesis of the closed-form counts that an input failed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionViolation {
    #[error("odd-order violation: N = {n} must be odd")]
    OddOrder { n: u64 },
    #[error("coprimality violation: gcd({k}, {l}) = {gcd} for M({k},{l})")]
    Coprimality { k: u64, l: u64, gcd: u64 },
    #[error("Burnside violation: radical {radical} of N = {n} is not a Burnside number (gcd with totient is {gcd})")]
    Burnside { n: u64, radical: u64, gcd: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive integer, got 0")]
    Zero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {p} does not divide {n}")]
    PrimeNotInSupport { p: u64, n: u64 },
    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(u64, u64),
    #[error("invalid group parameters k = {k}, l = {l}: both must be odd and positive")]
    InvalidParams { k: u64, l: u64 },
    #[error("group of size {0} is not of order 2N with N odd")]
    NotTwiceOdd(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("order mismatch: {gamma} and {g} have different orders")]
    OrderMismatch { gamma: MklParams, g: MklParams },
    #[error("holomorph size {required} exceeds the size guard {limit}")]
    SizeGuard { required: u128, limit: u128 },
    #[error("formula inapplicable: {0}")]
    Precondition(#[from] PreconditionViolation),
    #[error("k = {k} and l = {l} are coprime; use the closed-form count instead")]
    CoprimeInput { k: u64, l: u64 },
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
