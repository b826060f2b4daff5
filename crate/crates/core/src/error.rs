use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("enumeration budget exceeded: {what} needs {needed} but the limit is {limit}")]
    BudgetExceeded {
        what: String,
        needed: String,
        limit: u64,
    },

    #[error("partitions {parts} do not form a split of {target}")]
    InvalidSplit { target: String, parts: String },

    #[error("{d} does not divide every part of ({partition})")]
    NotDivisible { partition: String, d: usize },

    #[error("basis mismatch: {left} vs {right}")]
    BasisMismatch { left: String, right: String },

    #[error("undefined plethysm: {0}")]
    UndefinedPlethysm(String),

    #[error("plethystic exponential of a series with nonzero rational constant term {0}")]
    RationalConstant(String),

    #[error("expected an integer for {what}, got {value}")]
    NonIntegral { what: String, value: String },

    #[error("negative value {value} for {what}")]
    Negative { what: String, value: String },

    #[error("routes disagree on {what}: {detail}")]
    RouteMismatch { what: String, detail: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn budget(what: impl Into<String>, needed: impl ToString, limit: u64) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            needed: needed.to_string(),
            limit,
        }
    }

    pub fn mismatch(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::RouteMismatch {
            what: what.into(),
            detail: detail.into(),
        }
    }
}
