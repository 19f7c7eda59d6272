use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subgroup has infinite index")]
    InfiniteIndex,
    #[error("operation requires a nonzero ideal")]
    ZeroIdeal,
    #[error("operation requires a proper nonzero ideal")]
    ImproperIdeal,
    #[error("exponent is not a minimal generator of the ideal")]
    NotAGenerator,
    #[error("exponent rule yields a negative exponent at index {0}")]
    NegativeExponent(usize),
    #[error("family has bounded exponents; no witness exists")]
    BoundedFamily,
    #[error("unsupported coefficient ring: {0}")]
    UnsupportedBase(String),
    #[error("exponent box too small to decide: {0}")]
    TruncationCollision(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("monomial degree lies outside the restriction subgroup")]
    DegreeOutsideSubgroup,
    #[error("enumeration bound does not fit a machine integer")]
    IndexOverflow,
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
