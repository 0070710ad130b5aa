//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by estimation, filtering, optimization, and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A series is too short for the requested operation.
    #[error("insufficient data: need at least {required} observations, got {actual}")]
    InsufficientData { required: usize, actual: usize },

    /// The regression design matrix is singular (e.g. a constant series).
    #[error("degenerate estimation problem: singular design matrix")]
    SingularDesign,

    /// A vector or matrix has the wrong dimension.
    #[error("dimension mismatch for {what}: expected {expected}, got {actual}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        actual: usize,
    },

    /// A covariance matrix is not symmetric positive semidefinite.
    #[error("{what} is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPositiveSemidefinite {
        what: &'static str,
        min_eigenvalue: f64,
    },

    /// Strict model construction rejected a non-stationary parameter set.
    #[error("non-stationary model: companion spectral radius {spectral_radius:.6} >= 1")]
    NonStationary { spectral_radius: f64 },

    /// An argument is out of its valid range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The dynamic program is infeasible: degenerate risky asset or horizon.
    #[error(
        "infeasible mean-variance problem (degenerate risky asset or horizon): \
         total gain {theta_total:.6e} outside (0, 1)"
    )]
    Infeasible { theta_total: f64 },

    /// A second-moment matrix of excess returns is singular.
    #[error("singular excess-return second-moment matrix at period {period} (collinear assets)")]
    SingularMoment { period: usize },

    /// Both the observation noise and the parameter covariance are degenerate.
    #[error("fully degenerate filter: predictive variance is singular")]
    DegenerateFilter,

    /// A frontier target lies below the attainable minimum expectation.
    #[error(
        "target expected wealth {target:.6} below the frontier domain; \
         minimum attainable expectation is {minimum:.6}"
    )]
    TargetBelowMinimum { target: f64, minimum: f64 },

    /// Too many simulated paths were infeasible to trust the result.
    #[error("{excluded} of {total} simulated paths were infeasible (budget is 5%)")]
    TooManyInfeasiblePaths { excluded: usize, total: usize },

    /// A data file could not be parsed.
    #[error("parse error at line {line}{}: {message}", column.as_ref().map(|c| format!(", column {c}")).unwrap_or_default())]
    Parse {
        line: usize,
        column: Option<String>,
        message: String,
    },

    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}
