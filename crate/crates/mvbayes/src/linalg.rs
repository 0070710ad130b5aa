//! Small dense linear-algebra helpers shared across modules.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Relative tolerance used when testing matrices for symmetry.
pub(crate) const SYMMETRY_TOL: f64 = 1e-9;

/// Absolute eigenvalue tolerance below which a covariance is considered
/// numerically positive semidefinite and clamped rather than rejected.
pub(crate) const PSD_CLAMP_TOL: f64 = 1e-10;

/// `(m + m') / 2`.
pub(crate) fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

pub(crate) fn is_symmetric(m: &DMatrix<f64>, tol: f64) -> bool {
    if m.nrows() != m.ncols() {
        return false;
    }
    let scale = m.amax().max(1.0);
    for i in 0..m.nrows() {
        for j in (i + 1)..m.ncols() {
            if (m[(i, j)] - m[(j, i)]).abs() > tol * scale {
                return false;
            }
        }
    }
    true
}

pub(crate) fn min_eigenvalue(m: &DMatrix<f64>) -> f64 {
    m.clone()
        .symmetric_eigen()
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
}

/// Validates that `m` is symmetric PSD up to the clamp tolerance; negative
/// eigenvalues within the tolerance are set to zero, anything worse errors.
pub(crate) fn validate_psd(m: &DMatrix<f64>, what: &'static str) -> Result<DMatrix<f64>> {
    if !is_symmetric(m, SYMMETRY_TOL) {
        return Err(Error::InvalidParameter(format!("{what} must be symmetric")));
    }
    let sym = symmetrize(m);
    let eig = sym.clone().symmetric_eigen();
    let scale = eig.eigenvalues.amax().max(1.0);
    let min = eig.eigenvalues.min();
    if min < -PSD_CLAMP_TOL * scale {
        return Err(Error::NotPositiveSemidefinite {
            what,
            min_eigenvalue: min,
        });
    }
    if min < 0.0 {
        let mut vals = eig.eigenvalues.clone();
        vals.iter_mut().for_each(|v| *v = v.max(0.0));
        let q = eig.eigenvectors;
        Ok(symmetrize(&(&q * DMatrix::from_diagonal(&vals) * q.transpose())))
    } else {
        Ok(sym)
    }
}

/// Factor `L` of a PSD matrix with `L L' = m`. Uses Cholesky when the matrix
/// is positive definite and falls back to an eigenvalue square root for
/// singular PSD inputs (negative eigenvalues are clamped to zero).
pub(crate) fn psd_factor(m: &DMatrix<f64>) -> DMatrix<f64> {
    if let Some(chol) = m.clone().cholesky() {
        return chol.l();
    }
    let eig = symmetrize(m).symmetric_eigen();
    let sqrt = eig.eigenvalues.map(|v| v.max(0.0).sqrt());
    &eig.eigenvectors * DMatrix::from_diagonal(&sqrt)
}

/// Largest eigenvalue modulus of a square matrix.
pub(crate) fn spectral_radius(m: &DMatrix<f64>) -> f64 {
    m.complex_eigenvalues()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Companion matrix of a (vector) autoregression: `n*p x n*p` with the lag
/// coefficient blocks in the first block row and identity blocks below.
pub(crate) fn companion(coeff_blocks: &[DMatrix<f64>], n: usize, p: usize) -> DMatrix<f64> {
    let dim = n * p;
    let mut a = DMatrix::zeros(dim, dim);
    for (j, block) in coeff_blocks.iter().enumerate() {
        a.view_mut((0, j * n), (n, n)).copy_from(block);
    }
    for j in 1..p {
        a.view_mut((j * n, (j - 1) * n), (n, n))
            .copy_from(&DMatrix::identity(n, n));
    }
    a
}

/// Relative eigenvalue ratio below which a Gram matrix is treated as rank
/// deficient.
const GRAM_RCOND_TOL: f64 = 1e-12;

fn check_gram(a: &DMatrix<f64>) -> Result<()> {
    let eig = symmetrize(a).symmetric_eigen().eigenvalues;
    let max = eig.amax();
    let min = eig.min();
    if !(min > GRAM_RCOND_TOL * max.max(f64::MIN_POSITIVE)) {
        return Err(Error::SingularDesign);
    }
    Ok(())
}

/// Solves the symmetric positive definite system `a x = b`, rejecting rank
/// deficient (or numerically rank deficient) matrices as a singular design.
pub(crate) fn solve_spd(a: &DMatrix<f64>, b: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    check_gram(a)?;
    let chol = a.clone().cholesky().ok_or(Error::SingularDesign)?;
    Ok(chol.solve(b))
}

pub(crate) fn invert_spd(a: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    check_gram(a)?;
    let chol = a.clone().cholesky().ok_or(Error::SingularDesign)?;
    Ok(chol.inverse())
}

/// Kronecker product `a ⊗ b`.
pub(crate) fn kronecker(a: &DMatrix<f64>, b: &DMatrix<f64>) -> DMatrix<f64> {
    a.kronecker(b)
}

/// Deterministic seed mixer for independent replicate streams
/// (splitmix64 over the combined words).
pub(crate) fn mix_seed(seed: u64, stream: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .wrapping_add(index.wrapping_mul(0xbf58_476d_1ce4_e5b9));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Pairwise (cascade) summation; order-stable and accurate for long sums.
pub(crate) fn pairwise_sum(xs: &[f64]) -> f64 {
    match xs.len() {
        0 => 0.0,
        1 => xs[0],
        2 => xs[0] + xs[1],
        n => {
            let mid = n / 2;
            pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
        }
    }
}

#[allow(dead_code)]
pub(crate) fn dvec(xs: &[f64]) -> DVector<f64> {
    DVector::from_column_slice(xs)
}
