//! Closed-form background Green's functions for six graph families.
//!
//! All formulas are driven by the root `r >= 1` of `r + 1/r = 2 + alpha0`.
//! Products like `a r^i - a^{-1} r^{-i}` are evaluated in a rescaled form
//! (every power of `r` nonpositive) so sizes in the thousands stay inside
//! f64 range. The Robin constant `a` squares to
//! `1 + (r^2 - 1) / (r (1 + t - r))`, which is negative for small `t`; the
//! evaluation therefore runs in complex arithmetic and realifies at the end
//! (the imaginary parts cancel identically).

mod lattice;

pub use lattice::{
    elliptic_k, lattice2d_green, lattice2d_green_quadrature, lattice2d_green_with_error,
    Lattice2dParams, LATTICE_REL_TOL,
};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Root `r >= 1` of `r + 1/r = 2 + alpha0`, i.e.
/// `r = 1 + (alpha0 + sqrt(alpha0^2 + 4 alpha0)) / 2`.
pub fn growth_root(alpha0: f64) -> Result<f64> {
    if !(alpha0 > 0.0) || !alpha0.is_finite() {
        return Err(Error::NonpositiveAbsorption(alpha0));
    }
    Ok(1.0 + 0.5 * (alpha0 + (alpha0 * alpha0 + 4.0 * alpha0).sqrt()))
}

/// Parameters of the Robin path formula.
#[derive(Debug, Clone)]
pub struct PathParams {
    pub n: usize,
    pub alpha0: f64,
    pub t: f64,
    pub r: f64,
    pub gamma: f64,
    /// `a^2 = 1 + (r^2-1)/(r(1+t-r))`; negative for t < r-1, in which case
    /// `a` is purely imaginary and evaluation goes through complex arithmetic.
    pub a_squared: f64,
}

impl PathParams {
    pub fn new(n: usize, alpha0: f64, t: f64) -> Result<PathParams> {
        let r = growth_root(alpha0)?;
        if t < 0.0 || !t.is_finite() {
            return Err(Error::NegativeRobin(t));
        }
        let denom = r * (1.0 + t - r);
        if denom == 0.0 {
            return Err(Error::ParameterSingularity { t, r });
        }
        Ok(PathParams {
            n,
            alpha0,
            t,
            r,
            gamma: 1.0 / (1.0 + t),
            a_squared: 1.0 + (r * r - 1.0) / denom,
        })
    }
}

fn check_index(value: usize, max: usize) -> Result<()> {
    if value > max {
        return Err(Error::IndexOutOfRange {
            index: value as i64,
            max: max as i64,
        });
    }
    Ok(())
}

fn realify(z: Complex64) -> Result<f64> {
    let scale = z.re.abs().max(1.0);
    if z.im.abs() > 1e-10 * scale {
        return Err(Error::ResidualImaginary(z.im));
    }
    Ok(z.re)
}

/// Green's function of the path of length `n` (interior `1..=n`, boundary `0`
/// and `n+1`) with Robin boundary parameter `t`.
pub fn path_green_robin(n: usize, alpha0: f64, t: f64, i: usize, j: usize) -> Result<f64> {
    let p = PathParams::new(n, alpha0, t)?;
    path_green_robin_params(&p, i, j)
}

pub(crate) fn path_green_robin_params(p: &PathParams, i: usize, j: usize) -> Result<f64> {
    check_index(i, p.n + 1)?;
    check_index(j, p.n + 1)?;
    let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
    let r = p.r;
    let a = Complex64::new(p.a_squared, 0.0).sqrt();
    let a_inv = a.inv();
    // (a r^lo - a^-1 r^-lo)(a r^{n+1-hi} - a^-1 r^{-(n+1-hi)})
    //   / [(r - 1/r)(a^2 r^{n+1} - a^-2 r^{-(n+1)})]
    // rescaled by r^{-(n+1)} top and bottom, leaving the factor r^{lo-hi}.
    let f1 = a - a_inv * r.powi(-2 * lo as i32);
    let f2 = a - a_inv * r.powi(-2 * (p.n + 1 - hi) as i32);
    let den = (a * a - a_inv * a_inv * r.powi(-2 * (p.n as i32 + 1))) * (r - 1.0 / r);
    realify(f1 * f2 * r.powi(lo as i32 - hi as i32) / den)
}

/// Green's function of the path of length `n` with Dirichlet boundary
/// conditions, including the boundary-source columns.
pub fn path_green_dirichlet(n: usize, alpha0: f64, i: usize, j: usize) -> Result<f64> {
    let r = growth_root(alpha0)?;
    check_index(i, n + 1)?;
    check_index(j, n + 1)?;
    let last = n + 1;
    let shrink = |e: usize| r.powi(-(e as i32)); // r^{-e}, e >= 0
    let denom_unit = 1.0 - shrink(2 * (n + 1));
    if j == 0 {
        // harmonic extension of unit boundary data at the left vertex
        return Ok(shrink(i) * (1.0 - shrink(2 * (last - i))) / denom_unit);
    }
    if j == last {
        return Ok(shrink(last - i) * (1.0 - shrink(2 * i)) / denom_unit);
    }
    if i == 0 || i == last {
        return Ok(0.0);
    }
    let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
    Ok((1.0 - shrink(2 * lo)) * (1.0 - shrink(2 * (last - hi))) * shrink(hi - lo)
        / ((r - 1.0 / r) * denom_unit))
}

/// Green's function of the centered path with vertices `-n..=n` and boundary
/// `-(n+1)`, `n+1`: the Robin path formula after an index shift.
pub fn centered_path_green(n: usize, alpha0: f64, t: f64, i: i64, j: i64) -> Result<f64> {
    let shift = n as i64 + 1;
    for v in [i, j] {
        if v < -shift || v > shift {
            return Err(Error::IndexOutOfRange { index: v, max: shift });
        }
    }
    path_green_robin(2 * n + 1, alpha0, t, (i + shift) as usize, (j + shift) as usize)
}

/// Green's function of the infinite path: `exp(-log(r)|i-j|) / (2 sinh log r)`.
pub fn infinite_path_green(alpha0: f64, i: i64, j: i64) -> Result<f64> {
    let r = growth_root(alpha0)?;
    let d = (i - j).unsigned_abs() as i32;
    Ok(r.powi(-d) / (r - 1.0 / r))
}

/// Green's function of the loop on `2n+2` vertices `0..=2n+1`.
pub fn loop_green(n: usize, alpha0: f64, i: usize, j: usize) -> Result<f64> {
    let r = growth_root(alpha0)?;
    let total = 2 * n + 2;
    check_index(i, total - 1)?;
    check_index(j, total - 1)?;
    let diff = i.abs_diff(j);
    let d = diff.min(total - diff) as i32; // |i-j|_min <= n+1
    let m = n as i32 + 1;
    Ok((r.powi(-d) + r.powi(d - 2 * m)) / ((r - 1.0 / r) * (1.0 - r.powi(-2 * m))))
}

/// Green's function of the Mobius ladder on `2n+2` vertices, `n` odd.
///
/// Computed from the symmetric/antisymmetric decomposition: the symmetric
/// part solves a Robin path problem with `t = alpha0/2`, the antisymmetric
/// part a Dirichlet path problem with absorption shifted to `2 + alpha0`;
/// both live on the path of length `n` with the source at the center `(n+1)/2`
/// and extend to the full ladder by their reflection identities.
pub fn mobius_green(n: usize, alpha0: f64, i: usize, j: usize) -> Result<f64> {
    if n % 2 == 0 {
        return Err(Error::EvenMobius(n));
    }
    let total = 2 * n + 2;
    check_index(i, total - 1)?;
    check_index(j, total - 1)?;
    let half = (n + 1) / 2;
    let diff = i.abs_diff(j);
    let s = diff.min(total - diff); // 0..=n+1, both parts are even in s
    let (x, sign) = if s <= half { (s, 1.0) } else { (n + 1 - s, -1.0) };
    let g1 = 0.5 * path_green_robin(n, alpha0, alpha0 / 2.0, x + half, half)?;
    let g2 = 0.5 * path_green_dirichlet(n, 2.0 + alpha0, x + half, half)?;
    Ok(g1 + sign * g2)
}

/// Green's function of the complete graph on `d` interior vertices `0..d-1`,
/// each attached to its own boundary vertex `d..2d-1`, with Robin parameter
/// `t`. Boundary entries come from the boundary-condition relations.
pub fn complete_green(d: usize, alpha0: f64, t: f64, x: usize, y: usize) -> Result<f64> {
    if d < 2 {
        return Err(Error::InvalidParameter(format!(
            "complete graph needs d >= 2, got {d}"
        )));
    }
    if t < 0.0 || !t.is_finite() {
        return Err(Error::NegativeRobin(t));
    }
    if !(alpha0 > 0.0) {
        if alpha0 == 0.0 && t == 0.0 {
            return Err(Error::Singular);
        }
        return Err(Error::NonpositiveAbsorption(alpha0));
    }
    check_index(x, 2 * d - 1)?;
    check_index(y, 2 * d - 1)?;
    let gamma = 1.0 / (1.0 + t);
    let sigma = 2.0 + alpha0 - gamma;
    let g = 1.0 / ((sigma - 1.0) * (sigma + d as f64 - 1.0));
    let value = match (x < d, y < d) {
        (true, true) => {
            if x == y {
                sigma * g
            } else {
                g
            }
        }
        (false, true) | (true, false) => {
            let (b, int) = if x < d { (y, x) } else { (x, y) };
            if b - d == int {
                gamma * sigma * g
            } else {
                gamma * g
            }
        }
        (false, false) => {
            if x == y {
                gamma + gamma * gamma * sigma * g
            } else {
                gamma * gamma * g
            }
        }
    };
    Ok(value)
}

/// Parameters of the Bethe-lattice formula.
#[derive(Debug, Clone)]
pub struct BetheParams {
    pub k: usize,
    pub lambda: f64,
    pub norm: f64,
}

impl BetheParams {
    pub fn new(k: usize, alpha0: f64) -> Result<BetheParams> {
        if k < 2 {
            return Err(Error::BadCoordination(k));
        }
        if !(alpha0 > 0.0) || !alpha0.is_finite() {
            return Err(Error::NonpositiveAbsorption(alpha0));
        }
        let ka = k as f64 + alpha0;
        let disc = ka * ka - 4.0 * (k as f64 - 1.0);
        let lambda = (ka - disc.sqrt()) / (2.0 * (k as f64 - 1.0));
        if !(lambda < 1.0) {
            return Err(Error::UnboundedGreen(lambda));
        }
        Ok(BetheParams {
            k,
            lambda,
            norm: k as f64 * (1.0 - lambda) + alpha0,
        })
    }
}

/// Green's function of the Bethe lattice with coordination number `k` at
/// graph distance `dist`: `lambda^dist / (k(1-lambda) + alpha0)`.
pub fn bethe_green(k: usize, alpha0: f64, dist: usize) -> Result<f64> {
    let p = BetheParams::new(k, alpha0)?;
    Ok(p.lambda.powi(dist as i32) / p.norm)
}
