use thiserror::Error;

/// Errors produced by group construction, sumset computation, search, and
/// bound evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("element does not belong to the group: {0}")]
    GroupMismatch(String),

    #[error("operation requires a finite group, got Z")]
    InfiniteGroup,

    #[error("operation requires a subset of Z")]
    IntegersOnly,

    #[error("set must be nonempty")]
    EmptySet,

    #[error("multiplicity set must be nonempty")]
    EmptyMultiplicitySet,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("no set in the requested class: {0}")]
    EmptyClass(String),

    #[error("search space too large: {estimate} subsets exceeds cap {cap}")]
    Envelope { estimate: u128, cap: u64 },

    #[error("total degree {degree} exceeds cap {cap}")]
    DegreeCap { degree: u32, cap: u32 },

    #[error("unknown check id: {0}")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;
