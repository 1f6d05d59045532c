use thiserror::Error;

use crate::schur::SchurViolation;
use crate::sct::TheoryViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("group order {order} exceeds the configured maximum {max}")]
    OrderOverflow { order: usize, max: usize },

    #[error("{what} has {count} conjugacy classes, above the configured cap {cap}")]
    ClassCapExceeded { what: String, count: usize, cap: usize },

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("subgroup is not a union of superclasses")]
    NotSuperNormal,

    #[error("objects belong to different groups")]
    GroupMismatch,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("not a Schur partition: {0}")]
    Schur(SchurViolation),

    #[error("not a supercharacter theory: {0}")]
    Theory(TheoryViolation),

    #[error("product precondition failed: {0}")]
    Precondition(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl From<SchurViolation> for Error {
    fn from(v: SchurViolation) -> Self {
        Error::Schur(v)
    }
}

impl From<TheoryViolation> for Error {
    fn from(v: TheoryViolation) -> Self {
        Error::Theory(v)
    }
}
