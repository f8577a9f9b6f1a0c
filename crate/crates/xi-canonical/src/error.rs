//! Crate-wide error type.

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised anywhere in the pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Evaluation at (or too close to) a pole.
    #[error("pole encountered at {at}")]
    Pole { at: Complex64 },

    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Index exceeds a precomputed table.
    #[error("n = {n} exceeds table size n_max = {n_max}")]
    Range { n: usize, n_max: usize },

    /// A truncated integral cannot certify the requested tolerance.
    #[error("tail bound {bound:.3e} exceeds tolerance {tol:.3e}")]
    Convergence { bound: f64, tol: f64 },

    /// Operation requested outside the parameter regime it is defined for.
    #[error("regime error: {0}")]
    Regime(String),

    /// A determinant that must be positive came out non-positive.
    #[error("singular: {0}")]
    Singular(String),

    /// Truncated series cannot certify the requested tolerance.
    #[error("series tail bound {bound:.3e} exceeds tolerance {tol:.3e}")]
    Truncation { bound: f64, tol: f64 },

    /// Linear solve rejected because of conditioning.
    #[error("linear system condition estimate {cond:.3e} exceeds limit {limit:.3e}")]
    Solve { cond: f64, limit: f64 },

    /// Adaptive ODE step control failed.
    #[error("step control failure: {0}")]
    Step(String),

    /// Argument-principle contour passed too close to a zero.
    #[error("contour error: {0}")]
    Contour(String),

    /// Bad run configuration.
    #[error("config error: {0}")]
    Config(String),

    /// File output failure.
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
