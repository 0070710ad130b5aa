//! Specification, estimation, order selection, simulation, and multi-step
//! moment forecasting of AR(p) and VAR(p) return models.
//!
//! Models are stored in mean-deviation form (`mu`, lag coefficients, noise
//! variance) together with the equivalent regression intercept, since the
//! filtering machinery works on the regression parameterization
//! `r_t = c + phi_1 r_{t-1} + ... + phi_p r_{t-p} + eps_t` with
//! `c = mu (1 - sum phi_i)`.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;

/// Univariate autoregressive return model of order `p = phi.len()`.
#[derive(Debug, Clone, Serialize)]
pub struct ArModel {
    /// Unconditional mean of the series.
    pub mu: f64,
    /// Lag coefficients, `phi[0]` multiplying the most recent lag.
    pub phi: Vec<f64>,
    /// Innovation variance.
    pub sigma2: f64,
    /// Regression intercept `c = mu (1 - sum phi_i)`.
    pub intercept: f64,
    /// False when the companion spectral radius is >= 1. Such models are
    /// only produced by the flagged constructors; filtering still runs on
    /// them but simulations and long-horizon forecasts diverge.
    pub stationary: bool,
}

impl ArModel {
    /// Builds a model and rejects non-stationary coefficient sets.
    pub fn new(mu: f64, phi: Vec<f64>, sigma2: f64) -> Result<Self> {
        let model = Self::new_flagged(mu, phi, sigma2)?;
        if !model.stationary {
            return Err(Error::NonStationary {
                spectral_radius: linalg::spectral_radius(&model.companion_matrix()),
            });
        }
        Ok(model)
    }

    /// Builds a model, marking non-stationary coefficient sets with a
    /// warning flag instead of rejecting them.
    pub fn new_flagged(mu: f64, phi: Vec<f64>, sigma2: f64) -> Result<Self> {
        validate_ar_inputs(&phi, sigma2)?;
        let intercept = mu * (1.0 - phi.iter().sum::<f64>());
        let mut model = ArModel {
            mu,
            phi,
            sigma2,
            intercept,
            stationary: true,
        };
        model.stationary = linalg::spectral_radius(&model.companion_matrix()) < 1.0;
        Ok(model)
    }

    /// Builds a model from regression-form parameters `(c, phi_1..phi_p)`.
    /// The unconditional mean is recovered as `c / (1 - sum phi_i)`, which
    /// is non-finite for exact unit roots; such models carry the warning
    /// flag and their regression form remains usable.
    pub fn from_regression(intercept: f64, phi: Vec<f64>, sigma2: f64) -> Result<Self> {
        validate_ar_inputs(&phi, sigma2)?;
        let denom = 1.0 - phi.iter().sum::<f64>();
        let mu = intercept / denom;
        let mut model = ArModel {
            mu,
            phi,
            sigma2,
            intercept,
            stationary: true,
        };
        model.stationary = linalg::spectral_radius(&model.companion_matrix()) < 1.0;
        Ok(model)
    }

    /// Lag order.
    pub fn order(&self) -> usize {
        self.phi.len()
    }

    /// Regression parameter vector `(c, phi_1, ..., phi_p)`.
    pub fn regression_params(&self) -> DVector<f64> {
        let mut theta = DVector::zeros(self.phi.len() + 1);
        theta[0] = self.intercept;
        for (i, &phi) in self.phi.iter().enumerate() {
            theta[i + 1] = phi;
        }
        theta
    }

    fn companion_matrix(&self) -> DMatrix<f64> {
        let blocks: Vec<DMatrix<f64>> = self
            .phi
            .iter()
            .map(|&v| DMatrix::from_element(1, 1, v))
            .collect();
        linalg::companion(&blocks, 1, self.phi.len())
    }
}

/// Vector autoregressive return model for `n` assets, order `p`.
#[derive(Debug, Clone)]
pub struct VarModel {
    /// Unconditional mean vector (may be non-finite for flagged unit roots).
    pub mu: DVector<f64>,
    /// Lag coefficient matrices, `phi[0]` multiplying the most recent lag.
    pub phi: Vec<DMatrix<f64>>,
    /// Innovation covariance (symmetric PSD).
    pub sigma: DMatrix<f64>,
    /// Regression intercept `c = (I - sum Phi_j) mu`.
    pub intercept: DVector<f64>,
    /// Stationarity flag, as for [`ArModel`].
    pub stationary: bool,
}

impl VarModel {
    pub fn new(mu: DVector<f64>, phi: Vec<DMatrix<f64>>, sigma: DMatrix<f64>) -> Result<Self> {
        let model = Self::new_flagged(mu, phi, sigma)?;
        if !model.stationary {
            return Err(Error::NonStationary {
                spectral_radius: linalg::spectral_radius(&model.companion_matrix()),
            });
        }
        Ok(model)
    }

    pub fn new_flagged(
        mu: DVector<f64>,
        phi: Vec<DMatrix<f64>>,
        sigma: DMatrix<f64>,
    ) -> Result<Self> {
        let n = mu.len();
        validate_var_inputs(n, &phi, &sigma)?;
        let sigma = linalg::validate_psd(&sigma, "innovation covariance")?;
        let coeff_sum = phi.iter().fold(DMatrix::zeros(n, n), |acc, m| acc + m);
        let intercept = (DMatrix::identity(n, n) - coeff_sum) * &mu;
        let mut model = VarModel {
            mu,
            phi,
            sigma,
            intercept,
            stationary: true,
        };
        model.stationary = linalg::spectral_radius(&model.companion_matrix()) < 1.0;
        Ok(model)
    }

    /// Builds a model from the stacked regression coefficients
    /// `coeffs = [c | Phi_1 | ... | Phi_p]'` (a `k x n` matrix, `k = n p + 1`).
    pub fn from_regression(coeffs: &DMatrix<f64>, sigma: DMatrix<f64>) -> Result<Self> {
        let n = coeffs.ncols();
        let k = coeffs.nrows();
        if n == 0 || k == 0 || (k - 1) % n != 0 {
            return Err(Error::InvalidParameter(format!(
                "regression coefficient matrix has invalid shape {k}x{n}"
            )));
        }
        let p = (k - 1) / n;
        if p == 0 {
            return Err(Error::InvalidParameter(
                "lag order must be at least 1".into(),
            ));
        }
        let intercept: DVector<f64> = coeffs.row(0).transpose();
        let phi: Vec<DMatrix<f64>> = (0..p)
            .map(|j| coeffs.rows(1 + j * n, n).transpose())
            .collect();
        validate_var_inputs(n, &phi, &sigma)?;
        let sigma = linalg::validate_psd(&sigma, "innovation covariance")?;
        let coeff_sum = phi.iter().fold(DMatrix::zeros(n, n), |acc, m| acc + m);
        let lhs = DMatrix::identity(n, n) - coeff_sum;
        let mu = lhs
            .lu()
            .solve(&intercept)
            .unwrap_or_else(|| DVector::from_element(n, f64::NAN));
        let mut model = VarModel {
            mu,
            phi,
            sigma,
            intercept,
            stationary: true,
        };
        model.stationary = linalg::spectral_radius(&model.companion_matrix()) < 1.0;
        Ok(model)
    }

    pub fn asset_count(&self) -> usize {
        self.mu.len()
    }

    pub fn order(&self) -> usize {
        self.phi.len()
    }

    /// Stacked parameter vector of length `n k`: the regression coefficients
    /// of each asset's equation, stacked asset by asset.
    pub fn regression_params(&self) -> DVector<f64> {
        let form = RegressionForm::new(self.asset_count(), self.order());
        let k = form.regressor_len();
        let n = self.asset_count();
        let mut theta = DVector::zeros(n * k);
        for i in 0..n {
            theta[i * k] = self.intercept[i];
            for (j, phi) in self.phi.iter().enumerate() {
                for l in 0..n {
                    theta[i * k + 1 + j * n + l] = phi[(i, l)];
                }
            }
        }
        theta
    }

    fn companion_matrix(&self) -> DMatrix<f64> {
        linalg::companion(&self.phi, self.asset_count(), self.order())
    }
}

fn validate_ar_inputs(phi: &[f64], sigma2: f64) -> Result<()> {
    if phi.is_empty() {
        return Err(Error::InvalidParameter(
            "lag order must be at least 1".into(),
        ));
    }
    if !sigma2.is_finite() || sigma2 < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "innovation variance must be non-negative, got {sigma2}"
        )));
    }
    Ok(())
}

fn validate_var_inputs(n: usize, phi: &[DMatrix<f64>], sigma: &DMatrix<f64>) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "asset count must be positive".into(),
        ));
    }
    if phi.is_empty() {
        return Err(Error::InvalidParameter(
            "lag order must be at least 1".into(),
        ));
    }
    for m in phi {
        if m.nrows() != n || m.ncols() != n {
            return Err(Error::DimensionMismatch {
                what: "lag coefficient matrix",
                expected: n,
                actual: m.nrows(),
            });
        }
    }
    if sigma.nrows() != n || sigma.ncols() != n {
        return Err(Error::DimensionMismatch {
            what: "innovation covariance",
            expected: n,
            actual: sigma.nrows(),
        });
    }
    Ok(())
}

/// Regression-form bookkeeping for an `n`-asset order-`p` model: regressor
/// rows are `Z_t' = (1, R_{t-1}', ..., R_{t-p}')` of length `k = n p + 1`
/// and the stacked parameter vector has length `n k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegressionForm {
    pub n: usize,
    pub p: usize,
}

impl RegressionForm {
    pub fn new(n: usize, p: usize) -> Self {
        RegressionForm { n, p }
    }

    /// `k = n p + 1`.
    pub fn regressor_len(&self) -> usize {
        self.n * self.p + 1
    }

    /// Length of the stacked parameter vector, `n k`.
    pub fn param_len(&self) -> usize {
        self.n * self.regressor_len()
    }

    /// Scalar design row `(1, r_{t-1}, ..., r_{t-p})` from the `p` most
    /// recent observations supplied oldest-to-newest.
    pub fn design_row(&self, lags: &[f64]) -> Result<DVector<f64>> {
        if self.n != 1 {
            return Err(Error::InvalidParameter(
                "scalar design row requested for a multi-asset form".into(),
            ));
        }
        if lags.len() != self.p {
            return Err(Error::DimensionMismatch {
                what: "lag buffer",
                expected: self.p,
                actual: lags.len(),
            });
        }
        let mut row = DVector::zeros(self.regressor_len());
        row[0] = 1.0;
        for (i, &lag) in lags.iter().rev().enumerate() {
            row[1 + i] = lag;
        }
        Ok(row)
    }

    /// Vector design row `Z_t` from the `p` most recent observation vectors
    /// supplied oldest-to-newest.
    pub fn design_row_vec(&self, lags: &[DVector<f64>]) -> Result<DVector<f64>> {
        if lags.len() != self.p {
            return Err(Error::DimensionMismatch {
                what: "lag buffer",
                expected: self.p,
                actual: lags.len(),
            });
        }
        for lag in lags {
            if lag.len() != self.n {
                return Err(Error::DimensionMismatch {
                    what: "lag vector",
                    expected: self.n,
                    actual: lag.len(),
                });
            }
        }
        let mut row = DVector::zeros(self.regressor_len());
        row[0] = 1.0;
        for (j, lag) in lags.iter().rev().enumerate() {
            for i in 0..self.n {
                row[1 + j * self.n + i] = lag[i];
            }
        }
        Ok(row)
    }

    /// Observation matrix mapping the stacked parameter vector to the
    /// conditional mean of the next observation (the identity-Kronecker
    /// expansion of the design row).
    pub fn observation_matrix(&self, design_row: &DVector<f64>) -> DMatrix<f64> {
        let k = self.regressor_len();
        let mut f = DMatrix::zeros(self.n, self.n * k);
        for i in 0..self.n {
            for j in 0..k {
                f[(i, i * k + j)] = design_row[j];
            }
        }
        f
    }
}

/// Ordinary-least-squares fit of an AR(p) model.
///
/// Returns the fitted model together with the asymptotic parameter
/// covariance `C_0 = sigma2_hat (X'X)^{-1}`, the natural prior covariance
/// for sequential updating. Non-stationary estimates are flagged on the
/// model, not rejected.
pub fn fit_ols(returns: &[f64], p: usize) -> Result<(ArModel, DMatrix<f64>)> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "lag order must be at least 1".into(),
        ));
    }
    let t = returns.len();
    let k = p + 1;
    // T - p design rows; at least one residual degree of freedom.
    if t < p + k + 1 {
        return Err(Error::InsufficientData {
            required: p + k + 1,
            actual: t,
        });
    }
    let rows = t - p;
    let mut x = DMatrix::zeros(rows, k);
    let mut y = DVector::zeros(rows);
    for (row, target) in (p..t).enumerate() {
        x[(row, 0)] = 1.0;
        for lag in 1..=p {
            x[(row, lag)] = returns[target - lag];
        }
        y[row] = returns[target];
    }
    let xtx = x.transpose() * &x;
    let xty = x.transpose() * &y;
    let theta = linalg::solve_spd(&xtx, &DMatrix::from_column_slice(k, 1, xty.as_slice()))?;
    let theta = DVector::from_column_slice(theta.as_slice());
    let resid = &y - &x * &theta;
    let rss = resid.dot(&resid);
    let sigma2 = rss / (rows - k) as f64;
    let c0 = linalg::invert_spd(&xtx)? * sigma2;
    let phi = theta.as_slice()[1..].to_vec();
    let model = ArModel::from_regression(theta[0], phi, sigma2)?;
    Ok((model, linalg::symmetrize(&c0)))
}

/// Ordinary-least-squares fit of a VAR(p) model.
///
/// `C_0` is the asymptotic covariance of the stacked parameter vector
/// (residual covariance Kronecker the inverse design Gram matrix), with the
/// residual covariance degrees-of-freedom corrected.
pub fn fit_ols_var(returns: &[DVector<f64>], p: usize) -> Result<(VarModel, DMatrix<f64>)> {
    if p == 0 {
        return Err(Error::InvalidParameter(
            "lag order must be at least 1".into(),
        ));
    }
    let t = returns.len();
    if t == 0 {
        return Err(Error::InsufficientData {
            required: 2,
            actual: 0,
        });
    }
    let n = returns[0].len();
    let form = RegressionForm::new(n, p);
    let k = form.regressor_len();
    if t < p + k + 1 {
        return Err(Error::InsufficientData {
            required: p + k + 1,
            actual: t,
        });
    }
    for r in returns {
        if r.len() != n {
            return Err(Error::DimensionMismatch {
                what: "return vector",
                expected: n,
                actual: r.len(),
            });
        }
    }
    let rows = t - p;
    let mut z = DMatrix::zeros(rows, k);
    let mut y = DMatrix::zeros(rows, n);
    for (row, target) in (p..t).enumerate() {
        z[(row, 0)] = 1.0;
        for lag in 1..=p {
            for i in 0..n {
                z[(row, 1 + (lag - 1) * n + i)] = returns[target - lag][i];
            }
        }
        for i in 0..n {
            y[(row, i)] = returns[target][i];
        }
    }
    let ztz = z.transpose() * &z;
    let zty = z.transpose() * &y;
    let coeffs = linalg::solve_spd(&ztz, &zty)?;
    let resid = &y - &z * &coeffs;
    let sigma = resid.transpose() * &resid / (rows - k) as f64;
    let ztz_inv = linalg::invert_spd(&ztz)?;
    let c0 = linalg::kronecker(&linalg::symmetrize(&sigma), &ztz_inv);
    let model = VarModel::from_regression(&coeffs, sigma)?;
    Ok((model, linalg::symmetrize(&c0)))
}

/// Selects the AR lag order minimizing the AIC over `p = 1..=p_max`.
///
/// All candidates are scored on the common effective sample (targets
/// `t = p_max+1..T`) so that sample-size differences cannot bias the
/// comparison; ties break toward the smaller order.
pub fn select_order(returns: &[f64], p_max: usize) -> Result<usize> {
    if p_max == 0 {
        return Err(Error::InvalidParameter(
            "maximum lag order must be at least 1".into(),
        ));
    }
    let t = returns.len();
    if t < 2 * p_max + 2 {
        return Err(Error::InsufficientData {
            required: 2 * p_max + 2,
            actual: t,
        });
    }
    let rows = t - p_max;
    let mut best: Option<(usize, f64)> = None;
    for p in 1..=p_max {
        let k = p + 1;
        let mut x = DMatrix::zeros(rows, k);
        let mut y = DVector::zeros(rows);
        for (row, target) in (p_max..t).enumerate() {
            x[(row, 0)] = 1.0;
            for lag in 1..=p {
                x[(row, lag)] = returns[target - lag];
            }
            y[row] = returns[target];
        }
        let xtx = x.transpose() * &x;
        let xty = x.transpose() * &y;
        let theta = linalg::solve_spd(&xtx, &DMatrix::from_column_slice(k, 1, xty.as_slice()))?;
        let theta = DVector::from_column_slice(theta.as_slice());
        let resid = &y - &x * &theta;
        let sigma2_ml = resid.dot(&resid) / rows as f64;
        let aic = rows as f64 * sigma2_ml.ln() + 2.0 * k as f64;
        if best.map_or(true, |(_, best_aic)| aic < best_aic) {
            best = Some((p, aic));
        }
    }
    Ok(best.expect("at least one candidate").0)
}

/// VAR analog of [`select_order`]: per-equation AIC values are summed.
pub fn select_order_var(returns: &[DVector<f64>], p_max: usize) -> Result<usize> {
    if p_max == 0 {
        return Err(Error::InvalidParameter(
            "maximum lag order must be at least 1".into(),
        ));
    }
    let t = returns.len();
    if t == 0 {
        return Err(Error::InsufficientData {
            required: 2,
            actual: 0,
        });
    }
    let n = returns[0].len();
    let k_max = n * p_max + 1;
    if t < p_max + k_max + 1 {
        return Err(Error::InsufficientData {
            required: p_max + k_max + 1,
            actual: t,
        });
    }
    let rows = t - p_max;
    let mut best: Option<(usize, f64)> = None;
    for p in 1..=p_max {
        let k = n * p + 1;
        let mut z = DMatrix::zeros(rows, k);
        let mut y = DMatrix::zeros(rows, n);
        for (row, target) in (p_max..t).enumerate() {
            z[(row, 0)] = 1.0;
            for lag in 1..=p {
                for i in 0..n {
                    z[(row, 1 + (lag - 1) * n + i)] = returns[target - lag][i];
                }
            }
            for i in 0..n {
                y[(row, i)] = returns[target][i];
            }
        }
        let ztz = z.transpose() * &z;
        let zty = z.transpose() * &y;
        let coeffs = linalg::solve_spd(&ztz, &zty)?;
        let resid = &y - &z * &coeffs;
        let mut aic = 0.0;
        for i in 0..n {
            let rss: f64 = resid.column(i).iter().map(|v| v * v).sum();
            aic += rows as f64 * (rss / rows as f64).ln() + 2.0 * k as f64;
        }
        if best.map_or(true, |(_, best_aic)| aic < best_aic) {
            best = Some((p, aic));
        }
    }
    Ok(best.expect("at least one candidate").0)
}

fn burn_in(p: usize) -> usize {
    (10 * p).max(50)
}

/// Simulates a path of `length` observations from the model recursion with
/// Gaussian innovations; deterministic given `seed`.
///
/// When `init` is absent the lags start at the unconditional mean and a
/// burn-in of `max(50, 10 p)` steps is discarded; when present (`p` values,
/// oldest-to-newest) the recursion starts from it directly.
pub fn simulate_path(
    model: &ArModel,
    length: usize,
    seed: u64,
    init: Option<&[f64]>,
) -> Result<Vec<f64>> {
    if length == 0 {
        return Err(Error::InvalidParameter(
            "path length must be at least 1".into(),
        ));
    }
    let p = model.order();
    let (mut hist, burn) = match init {
        Some(init) => {
            if init.len() != p {
                return Err(Error::DimensionMismatch {
                    what: "initial lags",
                    expected: p,
                    actual: init.len(),
                });
            }
            (init.to_vec(), 0)
        }
        None => (vec![model.mu; p], burn_in(p)),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sigma = model.sigma2.sqrt();
    let mut path = Vec::with_capacity(length);
    for step in 0..burn + length {
        let mut value = model.mu;
        for (i, &phi) in model.phi.iter().enumerate() {
            value += phi * (hist[hist.len() - 1 - i] - model.mu);
        }
        let z: f64 = rng.sample(StandardNormal);
        value += sigma * z;
        hist.remove(0);
        hist.push(value);
        if step >= burn {
            path.push(value);
        }
    }
    Ok(path)
}

/// Vector analog of [`simulate_path`].
pub fn simulate_path_var(
    model: &VarModel,
    length: usize,
    seed: u64,
    init: Option<&[DVector<f64>]>,
) -> Result<Vec<DVector<f64>>> {
    if length == 0 {
        return Err(Error::InvalidParameter(
            "path length must be at least 1".into(),
        ));
    }
    let p = model.order();
    let n = model.asset_count();
    let (mut hist, burn) = match init {
        Some(init) => {
            if init.len() != p {
                return Err(Error::DimensionMismatch {
                    what: "initial lags",
                    expected: p,
                    actual: init.len(),
                });
            }
            for lag in init {
                if lag.len() != n {
                    return Err(Error::DimensionMismatch {
                        what: "lag vector",
                        expected: n,
                        actual: lag.len(),
                    });
                }
            }
            (init.to_vec(), 0)
        }
        None => (vec![model.mu.clone(); p], burn_in(p)),
    };
    let factor = linalg::psd_factor(&model.sigma);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut path = Vec::with_capacity(length);
    for step in 0..burn + length {
        let mut value = model.mu.clone();
        for (i, phi) in model.phi.iter().enumerate() {
            value += phi * (&hist[hist.len() - 1 - i] - &model.mu);
        }
        let z = DVector::from_fn(n, |_, _| rng.sample::<f64, _>(StandardNormal));
        value += &factor * z;
        hist.remove(0);
        hist.push(value.clone());
        if step >= burn {
            path.push(value);
        }
    }
    Ok(path)
}

/// Iterated conditional mean and variance of the next `horizon` observations
/// given the `p` most recent values (oldest-to-newest), holding parameters
/// fixed at their point values.
///
/// Variances propagate through the companion form: the one-step variance is
/// the innovation variance and each further step applies the companion map
/// and adds the innovation term, so variances are non-decreasing toward the
/// unconditional variance for stationary models.
pub fn forecast_moments(model: &ArModel, lags: &[f64], horizon: usize) -> Result<Vec<(f64, f64)>> {
    if horizon == 0 {
        return Err(Error::InvalidParameter("horizon must be at least 1".into()));
    }
    let p = model.order();
    if lags.len() != p {
        return Err(Error::DimensionMismatch {
            what: "lag values",
            expected: p,
            actual: lags.len(),
        });
    }
    let blocks: Vec<DMatrix<f64>> = model
        .phi
        .iter()
        .map(|&v| DMatrix::from_element(1, 1, v))
        .collect();
    let a = linalg::companion(&blocks, 1, p);
    // Deviation state, newest first.
    let mut state = DVector::from_fn(p, |i, _| lags[p - 1 - i] - model.mu);
    let mut cov = DMatrix::zeros(p, p);
    let mut noise = DMatrix::zeros(p, p);
    noise[(0, 0)] = model.sigma2;
    let mut out = Vec::with_capacity(horizon);
    for _ in 0..horizon {
        state = &a * state;
        cov = &a * cov * a.transpose() + &noise;
        out.push((model.mu + state[0], cov[(0, 0)]));
    }
    Ok(out)
}

/// Vector analog of [`forecast_moments`]: per-step marginal mean vectors and
/// covariance matrices.
pub fn forecast_moments_var(
    model: &VarModel,
    lags: &[DVector<f64>],
    horizon: usize,
) -> Result<Vec<(DVector<f64>, DMatrix<f64>)>> {
    if horizon == 0 {
        return Err(Error::InvalidParameter("horizon must be at least 1".into()));
    }
    let p = model.order();
    let n = model.asset_count();
    if lags.len() != p {
        return Err(Error::DimensionMismatch {
            what: "lag values",
            expected: p,
            actual: lags.len(),
        });
    }
    let a = linalg::companion(&model.phi, n, p);
    let dim = n * p;
    let mut state = DVector::zeros(dim);
    for (j, lag) in lags.iter().rev().enumerate() {
        if lag.len() != n {
            return Err(Error::DimensionMismatch {
                what: "lag vector",
                expected: n,
                actual: lag.len(),
            });
        }
        for i in 0..n {
            state[j * n + i] = lag[i] - model.mu[i];
        }
    }
    let mut cov = DMatrix::zeros(dim, dim);
    let mut noise = DMatrix::zeros(dim, dim);
    noise.view_mut((0, 0), (n, n)).copy_from(&model.sigma);
    let mut out = Vec::with_capacity(horizon);
    for _ in 0..horizon {
        state = &a * state;
        cov = &a * cov * a.transpose() + &noise;
        let mean = DVector::from_fn(n, |i, _| model.mu[i] + state[i]);
        let step_cov = cov.view((0, 0), (n, n)).into_owned();
        out.push((mean, linalg::symmetrize(&step_cov)));
    }
    Ok(out)
}
