use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Operation is not defined for these parameters (e.g. embeddings at tau = 1).
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// Hypothesis of a classification result not met.
    #[error("out of scope: {0}")]
    OutOfScope(String),
    /// Malformed user input (parsing, flags).
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A configured size cap was exceeded.
    #[error("cap exceeded: {what} = {value} > {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    /// No certified truncation within the configured limit.
    #[error("no certified truncation up to k = {limit}: {detail}")]
    Truncation { limit: u32, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
