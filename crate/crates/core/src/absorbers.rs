//! Analytic scattered fields for point absorbers.
//!
//! A point absorber of strength `kappa` at vertex `y` perturbs the operator
//! by `alpha0 kappa e_y e_y^T`; summing the geometric Born series gives the
//! scattered field in closed form. Several identical absorbers reduce to the
//! eigendecomposition of the restricted Green's matrix over the sites. The
//! closed forms are evaluated whenever the mode denominators are nonzero;
//! a flag reports separately whether the underlying series converges.

use std::collections::HashMap;
use std::sync::RwLock;

use nalgebra::{DMatrix, DVector};

use crate::born::GreensMatrix;
use crate::closed_form;
use crate::error::{Error, Result};

/// Entrywise-evaluable background Green's function over an index type.
pub trait BackgroundGreen<Ix: Copy> {
    fn eval(&self, i: Ix, j: Ix) -> f64;
}

impl BackgroundGreen<usize> for GreensMatrix {
    fn eval(&self, i: usize, j: usize) -> f64 {
        self.entries[(i, j)]
    }
}

/// Background Green's function of the infinite path.
#[derive(Debug, Clone)]
pub struct InfinitePathGreen {
    alpha0: f64,
}

impl InfinitePathGreen {
    pub fn new(alpha0: f64) -> Result<InfinitePathGreen> {
        closed_form::growth_root(alpha0)?;
        Ok(InfinitePathGreen { alpha0 })
    }
}

impl BackgroundGreen<i64> for InfinitePathGreen {
    fn eval(&self, i: i64, j: i64) -> f64 {
        closed_form::infinite_path_green(self.alpha0, i, j).expect("alpha0 validated")
    }
}

/// A scattered-field value with the Born-series convergence flag of the
/// absorber system that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scattered {
    pub value: f64,
    pub series_converges: bool,
}

/// Scattered field `(G0 - B)(i, j)` of a single absorber at `y`:
/// `alpha0 kappa / (1 + alpha0 kappa G0(y,y)) * G0(i,y) G0(j,y)`.
pub fn single_absorber_scattered<Ix: Copy>(
    g0: &impl BackgroundGreen<Ix>,
    y: Ix,
    kappa: f64,
    alpha0: f64,
    i: Ix,
    j: Ix,
) -> Result<Scattered> {
    let gyy = g0.eval(y, y);
    let denom = 1.0 + alpha0 * kappa * gyy;
    if denom == 0.0 || !denom.is_finite() {
        return Err(Error::ScatteringPole { mode: 0 });
    }
    Ok(Scattered {
        value: alpha0 * kappa / denom * g0.eval(i, y) * g0.eval(j, y),
        series_converges: (alpha0 * kappa * gyy).abs() < 1.0,
    })
}

/// Eigendecomposition of the restricted Green's matrix over the absorber
/// sites, with the mode factors `1 / (1 + alpha0 kappa lambda_l)`.
#[derive(Debug, Clone)]
pub struct ScatteringOperator {
    pub g_r: DMatrix<f64>,
    pub eigvals: Vec<f64>,
    /// Eigenvectors as columns.
    pub eigvecs: DMatrix<f64>,
    pub d_tilde: Vec<f64>,
    pub kappa: f64,
    pub alpha0: f64,
    /// `alpha0 kappa max |lambda| < 1`
    pub series_converges: bool,
}

/// Build the scattering operator for `m` identical absorbers.
pub fn scattering_operator<Ix: Copy + PartialEq>(
    g0: &impl BackgroundGreen<Ix>,
    sites: &[Ix],
    kappa: f64,
    alpha0: f64,
) -> Result<ScatteringOperator> {
    let m = sites.len();
    if m == 0 {
        return Err(Error::InvalidParameter("need at least one absorber".into()));
    }
    for a in 0..m {
        for b in (a + 1)..m {
            if sites[a] == sites[b] {
                return Err(Error::CoincidentSites);
            }
        }
    }
    let g_r = DMatrix::from_fn(m, m, |a, b| g0.eval(sites[a], sites[b]));
    let eig = g_r.clone().symmetric_eigen();
    let eigvals: Vec<f64> = eig.eigenvalues.iter().copied().collect();
    let mut d_tilde = Vec::with_capacity(m);
    for (l, &lam) in eigvals.iter().enumerate() {
        let denom = 1.0 + alpha0 * kappa * lam;
        if denom == 0.0 || !denom.is_finite() {
            return Err(Error::ScatteringPole { mode: l });
        }
        d_tilde.push(1.0 / denom);
    }
    let max_mode = eigvals.iter().fold(0.0f64, |acc, &l| acc.max(l.abs()));
    Ok(ScatteringOperator {
        g_r,
        eigvals,
        eigvecs: eig.eigenvectors,
        d_tilde,
        kappa,
        alpha0,
        series_converges: alpha0 * kappa * max_mode < 1.0,
    })
}

impl ScatteringOperator {
    /// Scattered field between `i` and `j` for the sites the operator was
    /// built over.
    pub fn scattered_at<Ix: Copy>(
        &self,
        g0: &impl BackgroundGreen<Ix>,
        sites: &[Ix],
        i: Ix,
        j: Ix,
    ) -> f64 {
        let m = sites.len();
        let a = DVector::from_fn(m, |k, _| g0.eval(sites[k], i));
        let b = DVector::from_fn(m, |k, _| g0.eval(sites[k], j));
        let qa = self.eigvecs.transpose() * a;
        let qb = self.eigvecs.transpose() * b;
        let mut acc = 0.0;
        for l in 0..m {
            acc += self.d_tilde[l] * qa[l] * qb[l];
        }
        self.alpha0 * self.kappa * acc
    }
}

/// Scattered field `(G0 - B)(i, j)` for several identical absorbers.
pub fn multi_absorber_scattered<Ix: Copy + PartialEq>(
    g0: &impl BackgroundGreen<Ix>,
    sites: &[Ix],
    kappa: f64,
    alpha0: f64,
    i: Ix,
    j: Ix,
) -> Result<Scattered> {
    let op = scattering_operator(g0, sites, kappa, alpha0)?;
    Ok(Scattered {
        value: op.scattered_at(g0, sites, i, j),
        series_converges: op.series_converges,
    })
}

/// Deviation of the exact two-absorber field on the infinite path from the
/// sum of two non-interacting single-absorber fields; tends to zero as the
/// separation grows.
pub fn far_separation_residual(
    alpha0: f64,
    kappa: f64,
    k1: i64,
    k2: i64,
    i: i64,
    j: i64,
) -> Result<f64> {
    let g0 = InfinitePathGreen::new(alpha0)?;
    let exact = multi_absorber_scattered(&g0, &[k1, k2], kappa, alpha0, i, j)?.value;
    let s1 = single_absorber_scattered(&g0, k1, kappa, alpha0, i, j)?.value;
    let s2 = single_absorber_scattered(&g0, k2, kappa, alpha0, i, j)?.value;
    Ok((exact - (s1 + s2)).abs())
}

/// Lattice Green's function with a concurrent cache keyed by absolute
/// offsets; each quadrature is expensive and sweep geometries reuse entries.
#[derive(Debug)]
pub struct Lattice2dGreen {
    alpha0: f64,
    cache: RwLock<HashMap<(i64, i64), (f64, f64)>>,
}

impl Lattice2dGreen {
    pub fn new(alpha0: f64) -> Result<Lattice2dGreen> {
        closed_form::Lattice2dParams::new(alpha0)?;
        Ok(Lattice2dGreen {
            alpha0,
            cache: RwLock::new(HashMap::new()),
        })
    }

    pub fn alpha0(&self) -> f64 {
        self.alpha0
    }

    /// `(value, error estimate)` at offsets `(dm, dn)`.
    pub fn eval(&self, dm: i64, dn: i64) -> Result<(f64, f64)> {
        let key = (dm.abs(), dn.abs());
        if let Some(&hit) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(hit);
        }
        let computed = closed_form::lattice2d_green_with_error(self.alpha0, 0, 0, key.0, key.1)?;
        self.cache.write().expect("cache lock").insert(key, computed);
        Ok(computed)
    }

    #[cfg(test)]
    fn cached_entries(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }
}

/// Two-absorber scattered field on the 2-D lattice.
#[derive(Debug, Clone, Copy)]
pub struct TwoAbsorberLattice {
    pub value: f64,
    pub lambda_plus: f64,
    pub lambda_minus: f64,
    /// Absolute error propagated from the quadrature error estimates.
    pub quad_error: f64,
    pub series_converges: bool,
}

/// Two absorbers at `(0, k1)` and `(0, k2)` on the lattice, source `(s, 0)`,
/// detector `(j, 0)`: the two-mode closed form with
/// `lambda_pm = g(0,0) +- g(0, k2-k1)`, quadrature error estimates propagated
/// to first order into the result.
pub fn two_absorber_lattice2d(
    green: &Lattice2dGreen,
    kappa: f64,
    k1: i64,
    k2: i64,
    s: i64,
    j: i64,
) -> Result<TwoAbsorberLattice> {
    if k1 == k2 {
        return Err(Error::CoincidentSites);
    }
    let alpha0 = green.alpha0;
    let inputs: [(f64, f64); 6] = [
        green.eval(0, 0)?,
        green.eval(0, k2 - k1)?,
        green.eval(j, k1)?,
        green.eval(j, k2)?,
        green.eval(s, k1)?,
        green.eval(s, k2)?,
    ];
    let value_of = |x: &[(f64, f64); 6]| -> Result<f64> {
        let modes = [x[0].0 + x[1].0, x[0].0 - x[1].0];
        let mut acc = 0.0;
        for (l, lam) in modes.into_iter().enumerate() {
            let denom = 1.0 + alpha0 * kappa * lam;
            if denom == 0.0 || !denom.is_finite() {
                return Err(Error::ScatteringPole { mode: l });
            }
            let (det, src) = if l == 0 {
                (x[2].0 + x[3].0, x[4].0 + x[5].0)
            } else {
                (x[2].0 - x[3].0, x[4].0 - x[5].0)
            };
            acc += det * src * alpha0 * kappa / denom;
        }
        Ok(0.5 * acc)
    };
    let value = value_of(&inputs)?;
    let mut quad_error = 0.0;
    for idx in 0..6 {
        if inputs[idx].1 == 0.0 {
            continue;
        }
        let mut nudged = inputs;
        nudged[idx].0 += inputs[idx].1;
        if let Ok(v) = value_of(&nudged) {
            quad_error += (v - value).abs();
        }
    }
    let lambda_plus = inputs[0].0 + inputs[1].0;
    let lambda_minus = inputs[0].0 - inputs[1].0;
    let max_mode = lambda_plus.abs().max(lambda_minus.abs());
    Ok(TwoAbsorberLattice {
        value,
        lambda_plus,
        lambda_minus,
        quad_error,
        series_converges: alpha0 * kappa * max_mode < 1.0,
    })
}
