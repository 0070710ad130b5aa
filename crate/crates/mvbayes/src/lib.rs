//! Sequential Bayesian estimation of serially correlated asset returns and
//! multi-period mean-variance portfolio selection with an uncertain exit time.
//!
//! The library is organized around a pipeline:
//!
//! 1. [`returns_model`] — fit AR(p)/VAR(p) models to return histories
//!    (least squares, AIC order selection), simulate paths, and forecast
//!    per-period return moments over a planning horizon.
//! 2. [`bayes_filter`] — treat the regression parameters as the state of a
//!    static dynamic linear model and update them sequentially as returns
//!    arrive, producing one-step-ahead predictive distributions.
//! 3. [`mv_optimizer`] — solve the multi-period mean-variance problem with
//!    uncertain exit time by backward dynamic programming: optimal affine
//!    policies, efficient frontiers, and Monte-Carlo policy simulation.
//! 4. [`experiments`] — study harnesses: win-probability parameter studies,
//!    backtests comparing updated vs. non-updated frontiers, exit-time
//!    sensitivity, and credible intervals for optimal portfolio returns.
//! 5. [`data_io`] — CSV price ingestion, return construction, and run
//!    configuration.
//! 6. [`cli`] — the command-line front end used by the `mvbayes` binary.
//!
//! Every randomized operation takes an explicit seed and is deterministic
//! given that seed, including under parallel execution.

pub mod bayes_filter;
pub mod cli;
pub mod data_io;
pub mod error;
pub mod experiments;
pub mod mv_optimizer;
pub mod returns_model;

mod linalg;

pub use error::{Error, Result};
