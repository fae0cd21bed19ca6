use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("capacity exceeded: {what} = {value}, limit is {limit}")]
    Capacity {
        what: &'static str,
        value: usize,
        limit: usize,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// The input describes a digraph that is not an oriented graph.
    #[error("not an oriented graph: {reason} at pair ({u}, {v})")]
    Domain {
        u: usize,
        v: usize,
        reason: &'static str,
    },

    #[error("budget exhausted: {0}")]
    Budget(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Short machine-readable tag, used in JSON diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Capacity { .. } => "capacity",
            Error::InvalidInput(_) => "invalid_input",
            Error::Parse { .. } => "parse",
            Error::Domain { .. } => "domain",
            Error::Budget(_) => "budget",
            Error::Internal(_) => "internal",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
