use thiserror::Error;

/// Failure modes shared by every analysis in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation (e.g. `|z| > 1`).
    #[error("domain error: {0}")]
    Domain(String),
    /// A numerically checked precondition does not hold on the sample grid.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// The mapping is outside the class a theorem applies to.
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("minimizer did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
