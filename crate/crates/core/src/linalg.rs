//! Small dense linear algebra helpers for Gaussian process sampling.

use crate::error::{Error, Result};

/// Diagonal regularization added when the plain factorization fails.
const JITTER: f64 = 1e-10;

/// Lower-triangular Cholesky factor `L` with `L * L^T = M`.
///
/// `matrix` is a row-major symmetric positive-definite matrix with
/// `dim * dim` entries. Gram matrices of smooth covariance kernels on fine
/// grids are often positive definite only up to rounding, so a failed
/// factorization is retried once with `1e-10` added to the diagonal; if
/// that also fails, an error reports the pivot that broke.
///
/// # Arguments
///
/// * `dim` - Matrix dimension, at least 1.
/// * `matrix` - Row-major entries, `matrix[i * dim + j] = M[i][j]`.
pub fn cholesky_factor(dim: usize, matrix: &[f64]) -> Result<Vec<f64>> {
    if matrix.len() != dim * dim {
        return Err(Error::MatrixShape {
            dim,
            expected: dim * dim,
            actual: matrix.len(),
        });
    }
    match try_factor(dim, matrix, 0.0) {
        Ok(l) => Ok(l),
        Err(_) => try_factor(dim, matrix, JITTER),
    }
}

fn try_factor(dim: usize, matrix: &[f64], jitter: f64) -> Result<Vec<f64>> {
    let mut l = vec![0.0; dim * dim];
    for i in 0..dim {
        for j in 0..=i {
            let mut sum = matrix[i * dim + j];
            if i == j {
                sum += jitter;
            }
            for k in 0..j {
                sum -= l[i * dim + k] * l[j * dim + k];
            }
            if i == j {
                if sum <= 0.0 || !sum.is_finite() {
                    return Err(Error::NotPositiveDefinite { index: i });
                }
                l[i * dim + i] = sum.sqrt();
            } else {
                l[i * dim + j] = sum / l[j * dim + j];
            }
        }
    }
    Ok(l)
}

/// Multiplies a row-major lower-triangular matrix by a vector,
/// `out = L * z`.
pub fn lower_triangular_matvec(dim: usize, l: &[f64], z: &[f64], out: &mut [f64]) {
    debug_assert_eq!(l.len(), dim * dim);
    debug_assert_eq!(z.len(), dim);
    debug_assert_eq!(out.len(), dim);
    for i in 0..dim {
        let row = &l[i * dim..i * dim + i + 1];
        out[i] = row.iter().zip(&z[..=i]).map(|(a, b)| a * b).sum();
    }
}
