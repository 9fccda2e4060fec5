use std::io;

use thiserror::Error;

/// Errors produced by the correlation library and its command-line front-end.
#[derive(Debug, Error)]
pub enum Error {
    /// A real argument fell outside the domain of the function.
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// Phase parameters that violate a realizability constraint.
    #[error("constraint violated: {0}")]
    Constraint(String),

    /// A caller-supplied function broke its documented contract.
    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
