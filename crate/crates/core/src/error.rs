use thiserror::Error;

use crate::report::VerificationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("line {line}: {message}")]
    Format { line: usize, message: String },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("{0} is not an element of the group")]
    NotMember(String),

    #[error("not a subgroup: {0}")]
    NotSubgroup(String),

    #[error("subgroup is not normal: {0}")]
    NotNormal(String),

    #[error("unknown point {0}")]
    UnknownPoint(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// The group is larger than the enumeration bound in force.
    #[error("capacity exceeded: group order {order} exceeds enumeration bound {bound} (raise ACG_ENUM_BOUND)")]
    Capacity { order: u64, bound: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    /// A checked theorem did not hold. Carries the full report with witnesses.
    #[error("theorem violation: {}", .0.failure_summary())]
    TheoremViolation(Box<VerificationReport>),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }

    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
