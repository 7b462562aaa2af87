//! Dense factorization and eigen helpers shared by the solver modules.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Cholesky factor of a symmetric positive definite matrix.
///
/// Hand-rolled so a failed factorization can report the offending pivot.
#[derive(Debug)]
pub struct SymmetricFactor {
    l: DMatrix<f64>,
}

impl SymmetricFactor {
    pub fn new(m: &DMatrix<f64>) -> Result<SymmetricFactor> {
        let n = m.nrows();
        check_symmetric(m)?;
        let mut l = DMatrix::zeros(n, n);
        for j in 0..n {
            let mut d = m[(j, j)];
            for k in 0..j {
                d -= l[(j, k)] * l[(j, k)];
            }
            if !(d > 0.0) || !d.is_finite() {
                return Err(Error::Factorization { pivot: j, value: d });
            }
            let dj = d.sqrt();
            l[(j, j)] = dj;
            for i in (j + 1)..n {
                let mut s = m[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)];
                }
                l[(i, j)] = s / dj;
            }
        }
        Ok(SymmetricFactor { l })
    }

    pub fn solve_vec(&self, b: &DVector<f64>) -> DVector<f64> {
        let n = self.l.nrows();
        let mut y = b.clone();
        for i in 0..n {
            for k in 0..i {
                let v = y[k];
                y[i] -= self.l[(i, k)] * v;
            }
            y[i] /= self.l[(i, i)];
        }
        for i in (0..n).rev() {
            for k in (i + 1)..n {
                let v = y[k];
                y[i] -= self.l[(k, i)] * v;
            }
            y[i] /= self.l[(i, i)];
        }
        y
    }

    /// Full inverse, column by column.
    pub fn inverse(&self) -> DMatrix<f64> {
        let n = self.l.nrows();
        let mut inv = DMatrix::zeros(n, n);
        let mut e = DVector::zeros(n);
        for j in 0..n {
            e[j] = 1.0;
            inv.set_column(j, &self.solve_vec(&e));
            e[j] = 0.0;
        }
        // Symmetrize away substitution round-off.
        for i in 0..n {
            for j in (i + 1)..n {
                let v = 0.5 * (inv[(i, j)] + inv[(j, i)]);
                inv[(i, j)] = v;
                inv[(j, i)] = v;
            }
        }
        inv
    }
}

fn check_symmetric(m: &DMatrix<f64>) -> Result<()> {
    let n = m.nrows();
    for i in 0..n {
        for j in (i + 1)..n {
            if m[(i, j)] != m[(j, i)] {
                return Err(Error::NotSymmetric(i, j));
            }
        }
    }
    Ok(())
}

pub fn is_symmetric(m: &DMatrix<f64>) -> bool {
    check_symmetric(m).is_ok()
}

/// Inverse of a general square matrix via LU (used for the non-symmetric
/// Dirichlet operator).
pub fn lu_inverse(m: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    m.clone().lu().try_inverse().ok_or(Error::Singular)
}

pub fn lu_solve(m: &DMatrix<f64>, b: &DVector<f64>) -> Result<DVector<f64>> {
    m.clone().lu().solve(b).ok_or(Error::Singular)
}

/// Spectral (operator l2) norm of a symmetric matrix: largest |eigenvalue|.
pub fn spectral_norm_sym(m: &DMatrix<f64>) -> f64 {
    if m.is_empty() {
        return 0.0;
    }
    let eig = m.clone().symmetric_eigen();
    eig.eigenvalues.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()))
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn min_eigenvalue_sym(m: &DMatrix<f64>) -> f64 {
    let eig = m.clone().symmetric_eigen();
    eig.eigenvalues.iter().fold(f64::INFINITY, |acc, &v| acc.min(v))
}

/// Sorted eigenvalues of a symmetric matrix, ascending.
pub fn eigenvalues_sym(m: &DMatrix<f64>) -> Vec<f64> {
    let eig = m.clone().symmetric_eigen();
    let mut v: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

/// Max absolute entry.
pub fn max_abs(m: &DMatrix<f64>) -> f64 {
    m.iter().fold(0.0f64, |acc, &v| acc.max(v.abs()))
}
