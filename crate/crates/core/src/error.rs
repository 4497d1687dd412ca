//! Crate-wide error type.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input rejected before any computation started.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A quadrature or solver could not reach the requested tolerance.
    /// The achieved error estimate is reported so callers can decide
    /// whether the result is still usable.
    #[error("accuracy target {requested:.3e} not reached (achieved {achieved:.3e}) in {context}")]
    Accuracy {
        context: String,
        requested: f64,
        achieved: f64,
    },

    /// A basis or matrix would exceed the configured size cap.
    #[error("sizing cap exceeded: dimension {dimension} > cap {cap}")]
    Sizing { dimension: u128, cap: u128 },

    /// An iterative eigensolver failed to converge.
    #[error("eigensolver did not converge: residual history {history:?}")]
    NonConvergence { history: Vec<f64> },

    /// Inconsistent truncation conventions or other internal diagnostics.
    #[error("diagnostic: {0}")]
    Diagnostic(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
