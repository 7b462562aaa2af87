//! Direct Green's functions, truncated Born-series solves, and the two
//! convergence certificates with truncation-error bounds.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg;
use crate::operator::{assemble_perturbed, AbsorptionProfile, DiffusionOperator};

/// How a Green's matrix was obtained.
#[derive(Debug, Clone, PartialEq)]
pub enum Provenance {
    DirectInverse,
    BornSeries(usize),
    ClosedForm(&'static str),
    /// Assembled from a spectral decomposition (characters or irreducible
    /// representations).
    Spectral,
}

/// Dense Green's matrix over interior-then-boundary indices.
#[derive(Debug, Clone)]
pub struct GreensMatrix {
    pub entries: DMatrix<f64>,
    pub alpha0: f64,
    pub provenance: Provenance,
}

impl GreensMatrix {
    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Spectral norm; the entries of every background Green's matrix handled
    /// here are symmetric.
    pub fn spectral_norm(&self) -> f64 {
        linalg::spectral_norm_sym(&self.entries)
    }

    /// Spectral norm of the principal submatrix on `support`.
    pub fn restricted_norm(&self, support: &[usize]) -> f64 {
        if support.is_empty() {
            return 0.0;
        }
        let m = support.len();
        let sub = DMatrix::from_fn(m, m, |i, j| self.entries[(support[i], support[j])]);
        linalg::spectral_norm_sym(&sub)
    }
}

/// Invert the assembled operator. Symmetric operators go through a Cholesky
/// factorization (the failure names the offending pivot); the non-symmetric
/// Dirichlet operator goes through LU.
pub fn greens_direct(h: &DiffusionOperator) -> Result<GreensMatrix> {
    let entries = if linalg::is_symmetric(&h.matrix) {
        linalg::SymmetricFactor::new(&h.matrix)?.inverse()
    } else {
        linalg::lu_inverse(&h.matrix)?
    };
    Ok(GreensMatrix {
        entries,
        alpha0: h.alpha0,
        provenance: Provenance::DirectInverse,
    })
}

fn apply_eta(eta: &AbsorptionProfile, u: &DVector<f64>) -> DVector<f64> {
    // eta lives on interior indices, which come first; boundary rows carry no
    // perturbation.
    let mut out = DVector::zeros(u.len());
    for &i in eta.support() {
        out[i] = eta.values()[i] * u[i];
    }
    out
}

/// Truncated Born-series solution
/// `u_N = sum_{m=0}^{N} (-alpha0)^m (G0 eta)^m G0 f`, evaluated by iterated
/// matrix-vector products. `N = 0` returns `G0 f`.
pub fn born_solve(
    g0: &GreensMatrix,
    eta: &AbsorptionProfile,
    alpha0: f64,
    n_terms: usize,
    f: &DVector<f64>,
) -> Result<DVector<f64>> {
    Ok(born_partial_sums(g0, eta, alpha0, n_terms, f)?
        .pop()
        .expect("at least the zeroth partial sum"))
}

/// All partial sums `u_0, ..., u_N` of the Born series (one solve sweep).
pub fn born_partial_sums(
    g0: &GreensMatrix,
    eta: &AbsorptionProfile,
    alpha0: f64,
    n_terms: usize,
    f: &DVector<f64>,
) -> Result<Vec<DVector<f64>>> {
    if f.len() != g0.dim() {
        return Err(Error::DimensionMismatch {
            expected: g0.dim(),
            got: f.len(),
        });
    }
    if eta.values().len() > g0.dim() {
        return Err(Error::DimensionMismatch {
            expected: g0.dim(),
            got: eta.values().len(),
        });
    }
    let mut term = &g0.entries * f;
    let mut acc = term.clone();
    let mut sums = Vec::with_capacity(n_terms + 1);
    sums.push(acc.clone());
    for _ in 1..=n_terms {
        term = &g0.entries * apply_eta(eta, &term) * (-alpha0);
        acc += &term;
        sums.push(acc.clone());
    }
    Ok(sums)
}

/// Truncated Born series as a matrix, column by column.
pub fn born_matrix(
    g0: &GreensMatrix,
    eta: &AbsorptionProfile,
    alpha0: f64,
    n_terms: usize,
) -> Result<GreensMatrix> {
    let dim = g0.dim();
    let mut entries = DMatrix::zeros(dim, dim);
    let mut e = DVector::zeros(dim);
    for j in 0..dim {
        e[j] = 1.0;
        entries.set_column(j, &born_solve(g0, eta, alpha0, n_terms, &e)?);
        e[j] = 0.0;
    }
    Ok(GreensMatrix {
        entries,
        alpha0: g0.alpha0,
        provenance: Provenance::BornSeries(n_terms),
    })
}

/// The two sufficient convergence conditions, as margins that must stay
/// below one. Norms are spectral; for the diagonal perturbation
/// `||eta|| = eta_max`.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    /// `alpha0 * ||G0|| * ||eta||`
    pub global_margin: f64,
    /// `alpha0 * eta_max * ||G0_Lambda||`
    pub restricted_margin: f64,
    pub converges_global: bool,
    pub converges_restricted: bool,
}

pub fn convergence_report(
    g0: &GreensMatrix,
    eta: &AbsorptionProfile,
    alpha0: f64,
) -> ConvergenceReport {
    let eta_max = eta.eta_max();
    let global_margin = alpha0 * g0.spectral_norm() * eta_max;
    let restricted_margin = alpha0 * eta_max * g0.restricted_norm(eta.support());
    ConvergenceReport {
        global_margin,
        restricted_margin,
        converges_global: global_margin < 1.0,
        converges_restricted: restricted_margin < 1.0,
    }
}

/// Upper bound on `||B - B_N||`:
/// `||G0||^2 q^N / (1 - q)` with `q = alpha0 ||G0_Lambda|| eta_max`.
pub fn truncation_error_bound(
    g0: &GreensMatrix,
    eta: &AbsorptionProfile,
    alpha0: f64,
    n_terms: usize,
) -> Result<f64> {
    let q = alpha0 * eta.eta_max() * g0.restricted_norm(eta.support());
    if !(q < 1.0) {
        return Err(Error::BoundUndefined(q));
    }
    let g0_norm = g0.spectral_norm();
    Ok(g0_norm * g0_norm * q.powi(n_terms as i32) / (1.0 - q))
}

/// Uniform sample of `count` interior indices without replacement, from a
/// seeded 64-bit PRNG. The partial Fisher-Yates walk keeps the draw
/// reproducible for a given seed.
pub fn select_support(n_interior: usize, count: usize, seed: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pool: Vec<usize> = (0..n_interior).collect();
    let count = count.min(n_interior);
    for i in 0..count {
        let j = rng.random_range(i..n_interior);
        pool.swap(i, j);
    }
    let mut support = pool[..count].to_vec();
    support.sort_unstable();
    support
}

/// Largest constant absorption on `support` for which the truncated-series
/// error still decays, found by bisection to absolute tolerance `1e-3`.
///
/// Decay is judged by comparing the l-infinity error at `n_max` against the
/// error at `n_max/2`; an empty support makes the series a single term and
/// returns infinity.
pub fn empirical_cutoff(
    h0: &DiffusionOperator,
    g0: &GreensMatrix,
    support: &[usize],
    source: &DVector<f64>,
    n_max: usize,
) -> Result<f64> {
    if support.is_empty() {
        return Ok(f64::INFINITY);
    }
    let decays = |eta_max: f64| -> Result<bool> {
        let eta = AbsorptionProfile::constant_on(h0.n_interior, support, eta_max);
        let h = assemble_perturbed(h0, &eta)?;
        let exact = linalg::SymmetricFactor::new(&h.matrix)?.solve_vec(source);
        let sums = born_partial_sums(g0, &eta, h0.alpha0, n_max, source)?;
        let err_at = |n: usize| (&sums[n] - &exact).amax();
        Ok(err_at(n_max) < err_at(n_max / 2))
    };
    let mut lo = 0.0;
    let mut hi = 1.0;
    while decays(hi)? {
        lo = hi;
        hi *= 2.0;
        if hi > 1e9 {
            return Ok(f64::INFINITY);
        }
    }
    while hi - lo > 1e-3 {
        let mid = 0.5 * (lo + hi);
        if decays(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
