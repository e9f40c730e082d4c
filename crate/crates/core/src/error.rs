use thiserror::Error;

/// Errors raised by the arithmetic, enumeration and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("{0} is not an odd prime coprime to 10")]
    InvalidPrime(u64),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),

    #[error("exponent {exponent} exceeds the supported limit {limit}")]
    ExponentTooLarge { exponent: u32, limit: u32 },

    #[error("exponent {0} must be even and at least 2")]
    OddExponent(u32),

    #[error("10t^2 - s^2 must be positive, got {0}")]
    NonPositiveNorm(i128),

    #[error("unit reduction did not settle within {0} steps")]
    ReductionDiverged(u32),

    #[error("no period found for modulus {modulus} within {cap} steps")]
    PeriodCapExceeded { modulus: u64, cap: u128 },

    #[error("{0} is already represented with a small exponent")]
    KnownValue(u64),

    #[error("candidate {c} is outside [{min}, {max}]")]
    OutOfRange { c: u64, min: u64, max: u64 },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
