use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{what} = {requested} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("net q-power ({offset24} + {shift24})/24 is not a nonnegative integer")]
    NonIntegralShift { offset24: i64, shift24: i64 },

    #[error("series inversion needs a leading coefficient of +1 or -1")]
    NotUnitLeading,

    #[error("gcd({h}, {k}) != 1")]
    NotCoprime { h: i64, k: i64 },

    #[error("determinant of [[{a}, {b}], [{c}, {d}]] is not 1")]
    NotUnimodular { a: i64, b: i64, c: i64, d: i64 },

    #[error("quadratic form is not positive definite")]
    NotPositiveDefinite,

    #[error("character {spec} is not supported modulo {modulus}")]
    UnsupportedCharacter { spec: String, modulus: u64 },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}
