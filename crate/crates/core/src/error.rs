use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("node index {0} out of range")]
    NodeOutOfRange(usize),

    #[error("empty node subset")]
    EmptySubset,

    #[error("negative coefficient in {0}")]
    NegativeCoefficient(&'static str),

    #[error("bound must be positive, got {0}")]
    NonPositiveBound(i64),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("class is outside the positive cone")]
    OutsidePositiveCone,

    #[error("{0} is not a prime > 3")]
    NotPrime(u64),

    #[error("singular curve: 4a^3 + 27b^2 = 0 mod {0}")]
    SingularCurve(u64),

    #[error("point ({x}, {y}) is not on the curve")]
    NotOnCurve { x: u64, y: u64 },

    #[error("classes live on different curves")]
    CurveMismatch,

    #[error("polynomial has a nonzero constant term")]
    NonzeroConstant,

    #[error("origin is not a critical point")]
    NotCritical,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("coefficient not representable in the field: {0}")]
    BadCoefficient(String),
}
