//! Backward dynamic-programming solution of the multi-period mean-variance
//! problem with uncertain exit time.
//!
//! Wealth follows the self-financing dynamics
//! `x_{t+1} = r0_t x_t + e_t u_t`, where `e_t` is the excess return of the
//! risky asset(s) over the gross riskless return and `u_t` the amount held
//! in the risky asset(s). The investor exits at `min(T, tau)` with `tau`
//! exogenous and discrete. The objective `E(x_exit) - omega Var(x_exit)` is
//! solved through the quadratic-utility embedding: backward recursions
//! produce per-period coefficients, the multiplier `lambda*` is recovered
//! from the optimality condition `lambda* = 1 + 2 omega E(x_exit)`, and the
//! optimal control is affine in current wealth.
//!
//! All riskless returns are gross (a weekly 0.57% rate enters as 1.0057);
//! net rates passed through the wealth recursion would annihilate wealth.

mod dp;
mod policy;

pub use dp::{
    auxiliary_value, dp_coefficients, dp_coefficients_var, expected_terminal_wealth, frontier,
    frontier_constant, frontier_variant, lambda_star, min_variance_expectation, AuxiliaryValue,
    DpCoefficients, FrontierPoint,
};
pub use policy::{
    auxiliary_policy, auxiliary_policy_var, evaluate_affine_policy, evaluate_affine_policy_var,
    evaluate_policy, optimal_policy, optimal_policy_var, simulate_policy, simulate_policy_var,
    Policy, PolicySample, VectorPolicy,
};

use nalgebra::{DMatrix, DVector};

use crate::bayes_filter::{Predictive, VectorPredictive};
use crate::error::{Error, Result};

/// Discrete distribution of the actual exit time over `1..=T`:
/// `probs[t-1]` is the probability of exiting at the end of period `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExitDistribution {
    probs: Vec<f64>,
}

impl ExitDistribution {
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidParameter(
                "exit distribution must cover at least one period".into(),
            ));
        }
        if probs.iter().any(|&p| !(p >= 0.0) || !p.is_finite()) {
            return Err(Error::InvalidParameter(
                "exit probabilities must be non-negative".into(),
            ));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter(format!(
                "exit probabilities must sum to 1, got {total}"
            )));
        }
        Ok(ExitDistribution { probs })
    }

    /// Exit with certainty at the horizon `T`.
    pub fn certain(horizon: usize) -> Self {
        let mut probs = vec![0.0; horizon];
        probs[horizon - 1] = 1.0;
        ExitDistribution { probs }
    }

    /// Uniform exit probability over `1..=T`.
    pub fn uniform(horizon: usize) -> Self {
        ExitDistribution {
            probs: vec![1.0 / horizon as f64; horizon],
        }
    }

    /// Small constant mass spread over `1..=T-1` with the remainder at `T`:
    /// `tail_mass` is the total early-exit probability.
    pub fn uniform_tail(horizon: usize, tail_mass: f64) -> Result<Self> {
        if horizon < 2 {
            return Err(Error::InvalidParameter(
                "uniform-tail exit needs a horizon of at least 2".into(),
            ));
        }
        if !(0.0..1.0).contains(&tail_mass) {
            return Err(Error::InvalidParameter(format!(
                "tail mass must lie in [0, 1), got {tail_mass}"
            )));
        }
        let early = tail_mass / (horizon - 1) as f64;
        let mut probs = vec![early; horizon];
        probs[horizon - 1] = 1.0 - tail_mass;
        Ok(ExitDistribution { probs })
    }

    pub fn horizon(&self) -> usize {
        self.probs.len()
    }

    /// `P(exit = t)` for `t` in `1..=T`; zero outside.
    pub fn prob(&self, t: usize) -> f64 {
        if t >= 1 && t <= self.probs.len() {
            self.probs[t - 1]
        } else {
            0.0
        }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Draws an exit period in `1..=T` by inverse CDF from a uniform draw.
    pub fn draw(&self, u: f64) -> usize {
        let mut acc = 0.0;
        for (i, &p) in self.probs.iter().enumerate() {
            acc += p;
            if u < acc {
                return i + 1;
            }
        }
        self.probs.len()
    }
}

/// Per-period first and second moments of the scalar excess return,
/// together with the gross riskless return earned over the same period.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExcessMoments {
    /// `E[e_t]`.
    pub mean: f64,
    /// `E[e_t^2]` (variance plus squared mean).
    pub second_moment: f64,
    /// Gross riskless return over period `t` (around 1.0).
    pub riskless_gross: f64,
}

impl ExcessMoments {
    /// Variance implied by the stored moments.
    pub fn variance(&self) -> f64 {
        self.second_moment - self.mean * self.mean
    }
}

/// Vector-case excess moments: `E[e_t]` and `E[e_t e_t']`.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorExcessMoments {
    pub mean: DVector<f64>,
    pub second_moment: DMatrix<f64>,
    pub riskless_gross: f64,
}

impl VectorExcessMoments {
    pub fn covariance(&self) -> DMatrix<f64> {
        &self.second_moment - &self.mean * self.mean.transpose()
    }
}

/// Excess-return moments from a predictive return distribution and the
/// gross riskless return over the same period (both in the same return
/// convention): `E[e] = f - r0` and `E[e^2] = Q + (f - r0)^2`.
pub fn excess_moments(pred: &Predictive, riskless_gross: f64) -> ExcessMoments {
    let mean = pred.mean - riskless_gross;
    ExcessMoments {
        mean,
        second_moment: pred.variance + mean * mean,
        riskless_gross,
    }
}

/// Vector analog of [`excess_moments`]: the riskless return is subtracted
/// componentwise and the second moment is `Q + (f - r0 1)(f - r0 1)'`.
pub fn excess_moments_var(pred: &VectorPredictive, riskless_gross: f64) -> VectorExcessMoments {
    let mean = pred.mean.map(|f| f - riskless_gross);
    let second_moment = &pred.covariance + &mean * mean.transpose();
    VectorExcessMoments {
        mean,
        second_moment,
        riskless_gross,
    }
}
