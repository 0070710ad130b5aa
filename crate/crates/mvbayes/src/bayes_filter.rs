//! Sequential Bayesian updating of AR/VAR regression parameters through a
//! static-parameter dynamic linear model.
//!
//! The regression parameters are the state of a degenerate DLM (identity
//! evolution, no evolution noise), so each observed return tightens a
//! Gaussian posterior over them. The one-step-ahead predictive distribution
//! of the next return is `N(f, Q)` with
//!
//! ```text
//! f = F' m        Q = F' C F + sigma2
//! ```
//!
//! where `F` is the regression row built from the lag buffer and `(m, C)`
//! the current posterior. The observation noise stays fixed at its initial
//! estimate throughout; conjugate variance learning is a possible extension
//! but is not implemented here.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::linalg;
use crate::returns_model::{
    forecast_moments, forecast_moments_var, ArModel, RegressionForm, VarModel,
};

/// One-step-ahead predictive distribution of a scalar return.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Predictive {
    pub mean: f64,
    pub variance: f64,
}

/// One-step-ahead predictive distribution of a return vector.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorPredictive {
    pub mean: DVector<f64>,
    pub covariance: DMatrix<f64>,
}

/// Posterior over the AR regression parameters `(c, phi_1..phi_p)` together
/// with the fixed observation noise and the lag buffer needed to build the
/// next regression row.
///
/// States are immutable values; [`ArFilterState::update`] returns the new
/// state, so independent filter chains can run concurrently.
#[derive(Debug, Clone)]
pub struct ArFilterState {
    /// Posterior mean, length `p + 1`.
    pub mean: DVector<f64>,
    /// Posterior covariance, `(p+1) x (p+1)`, symmetric PSD.
    pub cov: DMatrix<f64>,
    /// Fixed observation variance.
    pub noise: f64,
    /// The `p` most recent observed returns, oldest-to-newest.
    pub lags: Vec<f64>,
    /// Number of updates applied so far.
    pub updates: usize,
}

impl ArFilterState {
    /// Initializes the filter from a fitted model, a prior parameter
    /// covariance, and the `p` most recent returns (oldest-to-newest).
    pub fn new(model: &ArModel, c0: DMatrix<f64>, lags: &[f64]) -> Result<Self> {
        let k = model.order() + 1;
        if c0.nrows() != k || c0.ncols() != k {
            return Err(Error::DimensionMismatch {
                what: "prior covariance",
                expected: k,
                actual: c0.nrows(),
            });
        }
        if lags.len() != model.order() {
            return Err(Error::DimensionMismatch {
                what: "initial lags",
                expected: model.order(),
                actual: lags.len(),
            });
        }
        let cov = linalg::validate_psd(&c0, "prior covariance")?;
        Ok(ArFilterState {
            mean: model.regression_params(),
            cov,
            noise: model.sigma2,
            lags: lags.to_vec(),
            updates: 0,
        })
    }

    pub fn order(&self) -> usize {
        self.lags.len()
    }

    fn design_row(&self) -> DVector<f64> {
        RegressionForm::new(1, self.order())
            .design_row(&self.lags)
            .expect("lag buffer length is an invariant")
    }

    /// One-step-ahead predictive distribution of the next return.
    pub fn predict(&self) -> Predictive {
        let f = self.design_row();
        let mean = f.dot(&self.mean);
        let variance = (f.transpose() * &self.cov * &f)[(0, 0)] + self.noise;
        Predictive { mean, variance }
    }

    /// Conjugate posterior update for one observed return. The lag buffer
    /// advances regardless of how informative the observation is.
    pub fn update(&self, observed: f64) -> Result<Self> {
        let f = self.design_row();
        let pred = self.predict();
        let q = pred.variance;
        if !(q > 1e-300) {
            return Err(Error::DegenerateFilter);
        }
        let cf = &self.cov * &f;
        let gain = &cf / q;
        let mean = &self.mean + &gain * (observed - pred.mean);
        let cov = &self.cov - (&cf * cf.transpose()) / q;
        let mut lags = self.lags.clone();
        lags.remove(0);
        lags.push(observed);
        Ok(ArFilterState {
            mean,
            cov: linalg::symmetrize(&cov),
            noise: self.noise,
            lags,
            updates: self.updates + 1,
        })
    }

    /// Runs predict/update over a whole series. The k-th predictive is
    /// computed before the k-th value is observed, so the outputs are
    /// genuine one-step-ahead forecasts.
    pub fn filter_series(
        &self,
        series: &[f64],
    ) -> Result<(Self, Vec<Predictive>, Vec<DVector<f64>>)> {
        if series.is_empty() {
            return Err(Error::InsufficientData {
                required: 1,
                actual: 0,
            });
        }
        let mut state = self.clone();
        let mut predictives = Vec::with_capacity(series.len());
        let mut means = Vec::with_capacity(series.len());
        for &value in series {
            predictives.push(state.predict());
            state = state.update(value)?;
            means.push(state.mean.clone());
        }
        Ok((state, predictives, means))
    }

    /// Point model at the posterior mean with the fixed noise variance.
    pub fn point_model(&self) -> Result<ArModel> {
        let phi = self.mean.as_slice()[1..].to_vec();
        ArModel::from_regression(self.mean[0], phi, self.noise)
    }
}

/// Vector-case filter over the stacked VAR regression parameters.
#[derive(Debug, Clone)]
pub struct VarFilterState {
    /// Posterior mean of the stacked parameters, length `n k`.
    pub mean: DVector<f64>,
    /// Posterior covariance, `nk x nk`.
    pub cov: DMatrix<f64>,
    /// Fixed observation covariance, `n x n`.
    pub noise: DMatrix<f64>,
    /// The `p` most recent return vectors, oldest-to-newest.
    pub lags: Vec<DVector<f64>>,
    pub updates: usize,
    form: RegressionForm,
}

impl VarFilterState {
    pub fn new(model: &VarModel, c0: DMatrix<f64>, lags: &[DVector<f64>]) -> Result<Self> {
        let form = RegressionForm::new(model.asset_count(), model.order());
        let dim = form.param_len();
        if c0.nrows() != dim || c0.ncols() != dim {
            return Err(Error::DimensionMismatch {
                what: "prior covariance",
                expected: dim,
                actual: c0.nrows(),
            });
        }
        if lags.len() != model.order() {
            return Err(Error::DimensionMismatch {
                what: "initial lags",
                expected: model.order(),
                actual: lags.len(),
            });
        }
        for lag in lags {
            if lag.len() != model.asset_count() {
                return Err(Error::DimensionMismatch {
                    what: "lag vector",
                    expected: model.asset_count(),
                    actual: lag.len(),
                });
            }
        }
        let cov = linalg::validate_psd(&c0, "prior covariance")?;
        Ok(VarFilterState {
            mean: model.regression_params(),
            cov,
            noise: model.sigma.clone(),
            lags: lags.to_vec(),
            updates: 0,
            form,
        })
    }

    pub fn asset_count(&self) -> usize {
        self.form.n
    }

    pub fn order(&self) -> usize {
        self.form.p
    }

    fn observation_matrix(&self) -> DMatrix<f64> {
        let row = self
            .form
            .design_row_vec(&self.lags)
            .expect("lag buffer length is an invariant");
        self.form.observation_matrix(&row)
    }

    pub fn predict(&self) -> VectorPredictive {
        let obs = self.observation_matrix();
        let mean = &obs * &self.mean;
        let covariance = &obs * &self.cov * obs.transpose() + &self.noise;
        VectorPredictive {
            mean,
            covariance: linalg::symmetrize(&covariance),
        }
    }

    pub fn update(&self, observed: &DVector<f64>) -> Result<Self> {
        let n = self.asset_count();
        if observed.len() != n {
            return Err(Error::DimensionMismatch {
                what: "observation",
                expected: n,
                actual: observed.len(),
            });
        }
        let obs = self.observation_matrix();
        let pred = self.predict();
        let chol = pred
            .covariance
            .clone()
            .cholesky()
            .ok_or(Error::DegenerateFilter)?;
        // gain = C F' Q^{-1}, computed as (Q^{-1} F C)'.
        let fc = &obs * &self.cov;
        let gain = chol.solve(&fc).transpose();
        let mean = &self.mean + &gain * (observed - &pred.mean);
        let cov = &self.cov - &gain * &pred.covariance * gain.transpose();
        let mut lags = self.lags.clone();
        lags.remove(0);
        lags.push(observed.clone());
        Ok(VarFilterState {
            mean,
            cov: linalg::symmetrize(&cov),
            noise: self.noise.clone(),
            lags,
            updates: self.updates + 1,
            form: self.form,
        })
    }

    pub fn filter_series(
        &self,
        series: &[DVector<f64>],
    ) -> Result<(Self, Vec<VectorPredictive>, Vec<DVector<f64>>)> {
        if series.is_empty() {
            return Err(Error::InsufficientData {
                required: 1,
                actual: 0,
            });
        }
        let mut state = self.clone();
        let mut predictives = Vec::with_capacity(series.len());
        let mut means = Vec::with_capacity(series.len());
        for value in series {
            predictives.push(state.predict());
            state = state.update(value)?;
            means.push(state.mean.clone());
        }
        Ok((state, predictives, means))
    }

    /// Point model at the posterior mean with the fixed noise covariance.
    pub fn point_model(&self) -> Result<VarModel> {
        let n = self.asset_count();
        let k = self.form.regressor_len();
        let coeffs = DMatrix::from_fn(k, n, |row, col| self.mean[col * k + row]);
        VarModel::from_regression(&coeffs, self.noise.clone())
    }
}

/// Per-period predictive moments over a planning horizon, taken from the
/// filter's current state: the first period is the filter's own one-step
/// predictive (which carries the parameter-uncertainty term `F' C F`), and
/// later periods iterate the posterior-mean point model, holding parameters
/// fixed. This is the moment sequence the portfolio optimizer plans against.
pub fn planning_predictives(state: &ArFilterState, horizon: usize) -> Result<Vec<Predictive>> {
    let model = state.point_model()?;
    let fm = forecast_moments(&model, &state.lags, horizon)?;
    let mut out: Vec<Predictive> = fm
        .into_iter()
        .map(|(mean, variance)| Predictive { mean, variance })
        .collect();
    out[0] = state.predict();
    Ok(out)
}

/// Vector analog of [`planning_predictives`].
pub fn planning_predictives_var(
    state: &VarFilterState,
    horizon: usize,
) -> Result<Vec<VectorPredictive>> {
    let model = state.point_model()?;
    let fm = forecast_moments_var(&model, &state.lags, horizon)?;
    let mut out: Vec<VectorPredictive> = fm
        .into_iter()
        .map(|(mean, covariance)| VectorPredictive { mean, covariance })
        .collect();
    out[0] = state.predict();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::returns_model::{fit_ols, simulate_path};
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use rand_distr::StandardNormal;

    fn ar2_series(seed: u64, len: usize) -> Vec<f64> {
        let truth = ArModel::new(0.01, vec![0.35, -0.2], 0.05).unwrap();
        simulate_path(&truth, len, seed, None).unwrap()
    }

    /// Batch conjugate posterior of Bayesian linear regression with known
    /// noise: `C = (C0^-1 + X'X/s2)^-1`, `m = C (C0^-1 m0 + X'y/s2)`.
    fn batch_posterior(
        m0: &DVector<f64>,
        c0: &DMatrix<f64>,
        sigma2: f64,
        x: &DMatrix<f64>,
        y: &DVector<f64>,
    ) -> (DVector<f64>, DMatrix<f64>) {
        let c0_inv = c0.clone().try_inverse().unwrap();
        let precision = &c0_inv + x.transpose() * x / sigma2;
        let cov = precision.try_inverse().unwrap();
        let mean = &cov * (&c0_inv * m0 + x.transpose() * y / sigma2);
        (mean, cov)
    }

    #[test]
    fn sequential_updates_match_batch_conjugate_regression() {
        let series = ar2_series(3, 240);
        let (est, _) = fit_ols(&series[..40], 2).unwrap();
        let c0 = DMatrix::from_row_slice(
            3,
            3,
            &[
                4e-4, 1e-5, -2e-5, //
                1e-5, 9e-3, 1e-3, //
                -2e-5, 1e-3, 8e-3,
            ],
        );
        let lags = [series[38], series[39]];
        let state = ArFilterState::new(&est, c0.clone(), &lags).unwrap();
        let rest = &series[40..];
        assert_eq!(rest.len(), 200);
        let (final_state, _, _) = state.filter_series(rest).unwrap();

        // Batch regression over the same 200 observations.
        let mut x = DMatrix::zeros(200, 3);
        let mut y = DVector::zeros(200);
        let full = &series[38..];
        for i in 0..200 {
            x[(i, 0)] = 1.0;
            x[(i, 1)] = full[i + 1];
            x[(i, 2)] = full[i];
            y[i] = full[i + 2];
        }
        let (m_batch, c_batch) = batch_posterior(&est.regression_params(), &c0, est.sigma2, &x, &y);

        for i in 0..3 {
            assert!((final_state.mean[i] - m_batch[i]).abs() < 1e-9);
            for j in 0..3 {
                assert!((final_state.cov[(i, j)] - c_batch[(i, j)]).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn predict_with_point_mass_prior_is_direct_substitution() {
        let model = ArModel::new_flagged(0.0, vec![0.5], 1.0).unwrap();
        let state = ArFilterState::new(&model, DMatrix::zeros(2, 2), &[0.2]).unwrap();
        let pred = state.predict();
        assert_relative_eq!(pred.mean, 0.1, epsilon = 1e-15);
        assert_relative_eq!(pred.variance, 1.0, epsilon = 1e-15);
    }

    #[test]
    fn predict_with_diagonal_covariance() {
        let model = ArModel::new(0.03, vec![0.0], 0.25).unwrap();
        let vc = 0.01;
        let vphi = 0.04;
        let r = 0.6;
        let c0 = DMatrix::from_diagonal(&DVector::from_column_slice(&[vc, vphi]));
        let state = ArFilterState::new(&model, c0, &[r]).unwrap();
        let pred = state.predict();
        assert_relative_eq!(pred.mean, 0.03, epsilon = 1e-15);
        assert_relative_eq!(pred.variance, vc + vphi * r * r + 0.25, epsilon = 1e-15);
    }

    #[test]
    fn predictive_matches_monte_carlo_gaussian_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let m = DVector::from_column_slice(&[0.004, -0.2]);
        let a = DMatrix::from_row_slice(2, 2, &[0.03, 0.0, 0.01, 0.02]);
        let c0 = &a * a.transpose();
        let sigma2 = 0.0009;
        let lag = 0.013;
        let model = ArModel::from_regression(m[0], vec![m[1]], sigma2).unwrap();
        let state = ArFilterState::new(&model, c0.clone(), &[lag]).unwrap();
        let pred = state.predict();

        let factor = c0.clone().cholesky().unwrap().l();
        let n = 1_000_000;
        let mut sum = 0.0;
        let mut sumsq = 0.0;
        for _ in 0..n {
            let z = DVector::from_fn(2, |_, _| rng.sample::<f64, _>(StandardNormal));
            let theta = &m + &factor * z;
            let eps: f64 = rng.sample::<f64, _>(StandardNormal) * sigma2.sqrt();
            let r = theta[0] + theta[1] * lag + eps;
            sum += r;
            sumsq += r * r;
        }
        let mc_mean = sum / n as f64;
        let mc_var = sumsq / n as f64 - mc_mean * mc_mean;
        let se_mean = (pred.variance / n as f64).sqrt();
        let se_var = pred.variance * (2.0 / n as f64).sqrt();
        assert!((mc_mean - pred.mean).abs() < 3.0 * se_mean);
        assert!((mc_var - pred.variance).abs() < 3.0 * se_var);
    }

    #[test]
    fn observing_the_forecast_leaves_the_mean_unchanged() {
        let series = ar2_series(5, 120);
        let (est, c0) = fit_ols(&series, 2).unwrap();
        let state = ArFilterState::new(&est, c0, &series[series.len() - 2..]).unwrap();
        let pred = state.predict();
        let next = state.update(pred.mean).unwrap();
        for i in 0..3 {
            assert_relative_eq!(next.mean[i], state.mean[i], epsilon = 1e-12);
        }
        // Covariance still shrinks.
        let diff = &state.cov - &next.cov;
        assert!(crate::linalg::min_eigenvalue(&diff) > -1e-12);
        assert!(diff.trace() > 0.0);
    }

    #[test]
    fn point_mass_prior_is_never_revised() {
        let model = ArModel::new(0.01, vec![0.3], 0.02).unwrap();
        let state = ArFilterState::new(&model, DMatrix::zeros(2, 2), &[0.0]).unwrap();
        let next = state.update(0.5).unwrap();
        assert_eq!(next.mean, state.mean);
        assert_eq!(next.cov, state.cov);
        assert_eq!(next.lags, vec![0.5]);
    }

    #[test]
    fn degenerate_noise_and_prior_is_an_error() {
        let model = ArModel::new(0.01, vec![0.3], 0.0).unwrap();
        let state = ArFilterState::new(&model, DMatrix::zeros(2, 2), &[0.0]).unwrap();
        assert!(matches!(state.update(0.1), Err(Error::DegenerateFilter)));
    }

    #[test]
    fn negative_prior_eigenvalue_is_rejected() {
        let model = ArModel::new(0.01, vec![0.3], 0.02).unwrap();
        let c0 = DMatrix::from_row_slice(2, 2, &[1e-3, 0.0, 0.0, -1e-3]);
        assert!(ArFilterState::new(&model, c0, &[0.0]).is_err());
    }

    #[test]
    fn initial_state_carries_regression_parameters() {
        let model = ArModel::new(0.00207, vec![-0.13366], 0.00085).unwrap();
        let c0 = DMatrix::identity(2, 2) * 1e-4;
        let state = ArFilterState::new(&model, c0, &[0.001]).unwrap();
        // c = mu (1 - phi)
        assert_relative_eq!(state.mean[0], 0.00207 * (1.0 + 0.13366), epsilon = 1e-12);
        assert_relative_eq!(state.mean[1], -0.13366, epsilon = 1e-12);
        assert_relative_eq!(state.noise, 0.00085, epsilon = 1e-15);
    }

    #[test]
    fn filter_series_rejects_empty_and_folds_updates() {
        let series = ar2_series(9, 140);
        let (est, c0) = fit_ols(&series[..100], 2).unwrap();
        let state = ArFilterState::new(&est, c0, &series[98..100]).unwrap();
        assert!(state.filter_series(&[]).is_err());

        let single = state.filter_series(&series[100..101]).unwrap();
        assert_eq!(single.1.len(), 1);
        assert_eq!(single.1[0], state.predict());

        let (folded, preds, means) = state.filter_series(&series[100..126]).unwrap();
        assert_eq!(preds.len(), 26);
        assert_eq!(means.len(), 26);
        let mut manual = state.clone();
        for &v in &series[100..126] {
            manual = manual.update(v).unwrap();
        }
        assert_eq!(folded.mean, manual.mean);
        assert_eq!(folded.cov, manual.cov);
        assert_eq!(folded.lags, manual.lags);
    }

    #[test]
    fn information_is_monotone_and_q_dominates_noise() {
        let series = ar2_series(13, 160);
        let (est, c0) = fit_ols(&series[..60], 2).unwrap();
        let mut state = ArFilterState::new(&est, c0, &series[58..60]).unwrap();
        for &v in &series[60..160] {
            let pred = state.predict();
            assert!(pred.variance >= state.noise - 1e-15);
            let next = state.update(v).unwrap();
            let diff = &state.cov - &next.cov;
            assert!(crate::linalg::min_eigenvalue(&diff) > -1e-10);
            state = next;
        }
    }

    #[test]
    fn one_asset_var_filter_matches_ar_filter() {
        let series = ar2_series(17, 200);
        let vec_series: Vec<DVector<f64>> = series
            .iter()
            .map(|&v| DVector::from_element(1, v))
            .collect();
        let (ar_est, ar_c0) = crate::returns_model::fit_ols(&series[..80], 2).unwrap();
        let (var_est, var_c0) = crate::returns_model::fit_ols_var(&vec_series[..80], 2).unwrap();

        let ar_state = ArFilterState::new(&ar_est, ar_c0, &series[78..80]).unwrap();
        let var_state = VarFilterState::new(&var_est, var_c0, &vec_series[78..80]).unwrap();

        let (ar_final, ar_preds, ar_means) = ar_state.filter_series(&series[80..200]).unwrap();
        let (var_final, var_preds, var_means) =
            var_state.filter_series(&vec_series[80..200]).unwrap();

        for (a, b) in ar_preds.iter().zip(var_preds.iter()) {
            assert_relative_eq!(a.mean, b.mean[0], epsilon = 1e-12);
            assert_relative_eq!(a.variance, b.covariance[(0, 0)], epsilon = 1e-12);
        }
        for (a, b) in ar_means.iter().zip(var_means.iter()) {
            for i in 0..3 {
                assert_relative_eq!(a[i], b[i], epsilon = 1e-12);
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                assert_relative_eq!(ar_final.cov[(i, j)], var_final.cov[(i, j)], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn standardized_innovations_are_calibrated() {
        // theta drawn from the prior, data simulated from that theta, filter
        // run with the matching prior: innovations are standard normal.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let prior_mean = DVector::from_column_slice(&[0.005, 0.3]);
        let prior_sd = [0.002, 0.05];
        let sigma2 = 0.001;
        let mut zs: Vec<f64> = Vec::new();
        for _ in 0..100 {
            let theta = DVector::from_column_slice(&[
                prior_mean[0] + prior_sd[0] * rng.sample::<f64, _>(StandardNormal),
                prior_mean[1] + prior_sd[1] * rng.sample::<f64, _>(StandardNormal),
            ]);
            let true_model = ArModel::from_regression(theta[0], vec![theta[1]], sigma2).unwrap();
            let seed: u64 = rng.gen();
            let series = simulate_path(&true_model, 101, seed, None).unwrap();
            let prior_model =
                ArModel::from_regression(prior_mean[0], vec![prior_mean[1]], sigma2).unwrap();
            let c0 = DMatrix::from_diagonal(&DVector::from_column_slice(&[
                prior_sd[0] * prior_sd[0],
                prior_sd[1] * prior_sd[1],
            ]));
            let mut state = ArFilterState::new(&prior_model, c0, &series[..1]).unwrap();
            for &r in &series[1..] {
                let pred = state.predict();
                zs.push((r - pred.mean) / pred.variance.sqrt());
                state = state.update(r).unwrap();
            }
        }
        let n = zs.len() as f64;
        assert_eq!(zs.len(), 10_000);
        let mean = zs.iter().sum::<f64>() / n;
        let var = zs.iter().map(|z| z * z).sum::<f64>() / n - mean * mean;
        assert!(mean.abs() < 3.0 / n.sqrt(), "mean {mean}");
        assert!((var - 1.0).abs() < 3.0 * (2.0 / n).sqrt(), "var {var}");
    }

    #[test]
    fn planning_moments_start_from_the_filter_predictive() {
        let series = ar2_series(29, 160);
        let (est, c0) = fit_ols(&series[..120], 2).unwrap();
        let state = ArFilterState::new(&est, c0, &series[118..120]).unwrap();
        let (state, _, _) = state.filter_series(&series[120..]).unwrap();
        let plan = planning_predictives(&state, 6).unwrap();
        let direct = state.predict();
        assert_eq!(plan[0], direct);
        // Later periods use the point model held fixed.
        let model = state.point_model().unwrap();
        let fm = forecast_moments(&model, &state.lags, 6).unwrap();
        for (k, p) in plan.iter().enumerate().skip(1) {
            assert_relative_eq!(p.mean, fm[k].0, epsilon = 1e-14);
            assert_relative_eq!(p.variance, fm[k].1, epsilon = 1e-14);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn batch_and_sequential_posteriors_coincide(seed in 0u64..5000) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let phi: f64 = rng.gen_range(-0.6..0.6);
            let c: f64 = rng.gen_range(-0.01..0.01);
            let sigma2: f64 = rng.gen_range(0.0005..0.05);
            let model = ArModel::from_regression(c, vec![phi], sigma2).unwrap();
            let path_seed: u64 = rng.gen();
            let series = simulate_path(&model, 61, path_seed, None).unwrap();
            let d = rng.gen_range(0.001..0.1);
            let c0 = DMatrix::from_diagonal(&DVector::from_column_slice(&[d, d * 0.5]));
            let state = ArFilterState::new(&model, c0.clone(), &series[..1]).unwrap();
            let (final_state, _, _) = state.filter_series(&series[1..]).unwrap();

            let rows = series.len() - 1;
            let mut x = DMatrix::zeros(rows, 2);
            let mut y = DVector::zeros(rows);
            for i in 0..rows {
                x[(i, 0)] = 1.0;
                x[(i, 1)] = series[i];
                y[i] = series[i + 1];
            }
            let (m_batch, c_batch) =
                batch_posterior(&model.regression_params(), &c0, sigma2, &x, &y);
            for i in 0..2 {
                prop_assert!((final_state.mean[i] - m_batch[i]).abs() < 1e-9);
                for j in 0..2 {
                    prop_assert!((final_state.cov[(i, j)] - c_batch[(i, j)]).abs() < 1e-9);
                }
            }
        }
    }
}
