use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeP(u32),
    #[error("modulus must be monic with {} digits for k = {k}, got {digits}", k + 1)]
    DegreeMismatch { k: u32, digits: usize },
    #[error("modulus digit {digit} is not below p = {p}")]
    BadDigit { digit: u32, p: u32 },
    #[error("modulus is reducible")]
    ReducibleModulus,
    #[error("field {p}^{k} exceeds the supported size")]
    FieldTooLarge { p: u32, k: u32 },
    #[error("element encoding {enc} is out of range for a field of order {order}")]
    BadElement { enc: u32, order: u32 },
    #[error("division by zero")]
    DivisionByZero,

    #[error("invalid curve: {0}")]
    BadCurve(String),
    #[error("field order {actual} does not match the required {expected}")]
    FieldOrderMismatch { expected: u32, actual: u32 },
    #[error("{0} is a gap of the semigroup")]
    GapValue(i64),
    #[error("value {value} is out of range (must be below {limit})")]
    OutOfRange { value: i64, limit: i64 },
    #[error("leading term of the zero element")]
    ZeroElement,
    #[error("point ({0}, {1}) is listed twice")]
    DuplicatePoint(u32, u32),
    #[error("point ({0}, {1}) is not a nonsingular point of the curve")]
    PointNotOnCurve(u32, u32),
    #[error("expected {expected} entries, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("degree cap u = {u} must be below the code length n = {n}")]
    DegreeCapTooLarge { u: i64, n: usize },
    #[error("pivot coefficient vanished at s = {0}")]
    InternalPivotZero(i64),

    #[error("bad config: {0}")]
    BadConfig(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
