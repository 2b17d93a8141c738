use thiserror::Error;

use crate::matroid::ValidationReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected length {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("capacity exceeded: {what} is {actual}, limit is {limit}")]
    Capacity {
        what: &'static str,
        limit: usize,
        actual: usize,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("inconsistent input: {message}")]
    Inconsistent {
        message: String,
        report: Option<ValidationReport>,
    },

    #[error("matroid is not acyclic: {0}")]
    NotAcyclic(String),

    #[error("unknown name: {0}")]
    Lookup(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn argument(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn inconsistent(msg: impl Into<String>, report: Option<ValidationReport>) -> Self {
        Error::Inconsistent {
            message: msg.into(),
            report,
        }
    }

    pub(crate) fn check_capacity(what: &'static str, actual: usize, limit: usize) -> Result<()> {
        if actual > limit {
            Err(Error::Capacity {
                what,
                limit,
                actual,
            })
        } else {
            Ok(())
        }
    }
}
