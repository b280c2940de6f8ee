//! Error type shared across the crate.

use alloc::string::String;

/// Everything that can go wrong in field construction, polynomial algebra,
/// family specialization, or experiment sweeps.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,
    #[error("family is not monic in x")]
    NotMonicInX,
    #[error("coefficient tuple has wrong arity: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("iterate degree {degree} exceeds cap {cap}")]
    DegreeCapExceeded { degree: u64, cap: u64 },
    #[error("sweep size {size} exceeds cap {cap}")]
    SweepCapExceeded { size: u128, cap: u64 },
    #[error("coefficient index {0} is not in the family's support")]
    IndexNotInSupport(u32),
    #[error("degree {0} too small for this operation")]
    DegreeTooSmall(u32),
    #[error("distributions have different degrees: {0} vs {1}")]
    DegreeMismatch(u32, u32),
    #[error("group closure exceeds cap {cap}")]
    ClosureTooLarge { cap: usize },
    #[error("unknown fixture key: {0}")]
    UnknownFixture(String),
    #[error("fixture {key} is only defined in characteristic {p}")]
    FixtureCharacteristic { key: String, p: u64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::UnsupportedSize(msg.into())
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
