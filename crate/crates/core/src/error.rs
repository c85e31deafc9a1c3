use thiserror::Error;

/// Errors reported by the exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0}")]
    NotAPartition(String),

    #[error("partition sizes differ: {left} vs {right}")]
    SizeMismatch { left: u32, right: u32 },

    #[error("degree {degree} outside the valid range [{min}, {max}]")]
    DegreeOutOfRange { degree: u32, min: u32, max: u32 },

    #[error("cannot decrement the first part of the empty partition")]
    EmptyBump,

    #[error("{name} must be nonnegative, got {value}")]
    NegativeParameter { name: &'static str, value: i64 },

    #[error("invalid reduced data {0}: entries after the first must form a partition")]
    InvalidReducedData(String),

    #[error("recovery requires |nu| >= |lambda| >= |mu|, got sizes {nu}, {lambda}, {mu}")]
    RecoveryHypothesis { lambda: i64, mu: i64, nu: i64 },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("need at least {needed} variables, got {got}")]
    TooFewVariables { needed: usize, got: usize },

    #[error("mixed term sizes in expansion input: {0} vs {1}")]
    MixedSizes(i64, i64),

    #[error("input size {0} exceeds the supported limit {1} for this reference computation")]
    OracleLimit(u32, u32),
}

pub type Result<T> = std::result::Result<T, Error>;
