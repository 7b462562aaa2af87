//! Green's function of the infinite 2-D lattice and the complete elliptic
//! integral backing its diagonal.
//!
//! The Fourier inversion runs over the (u, v) = ((xi+eta)/2, (xi-eta)/2)
//! diamond, a fundamental domain of the integrand's period lattice whose
//! area is half the [-pi, pi]^2 square; extending the integral to the square
//! therefore costs a factor 1/2, giving the 1/(4 pi) prefactor below. The
//! truncated-lattice direct solve pins this normalization.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::quadrature;

/// Relative tolerance used for the lattice quadrature.
pub const LATTICE_REL_TOL: f64 = 1e-10;

/// Parameters of the 2-D lattice formula.
#[derive(Debug, Clone)]
pub struct Lattice2dParams {
    /// `a = 1 + alpha0/4 > 1`, keeping `sqrt(a^2 - cos^2 v)` away from zero.
    pub a: f64,
    pub rel_tol: f64,
}

impl Lattice2dParams {
    pub fn new(alpha0: f64) -> Result<Lattice2dParams> {
        if !(alpha0 > 0.0) || !alpha0.is_finite() {
            return Err(Error::NonpositiveAbsorption(alpha0));
        }
        Ok(Lattice2dParams {
            a: 1.0 + alpha0 / 4.0,
            rel_tol: LATTICE_REL_TOL,
        })
    }
}

/// Complete elliptic integral of the first kind with the modulus appearing
/// squared in the integrand:
///
/// ```text
/// K(m) = Int_0^{pi/2} dphi / sqrt(1 - m^2 sin^2 phi),   m^2 < 1
/// ```
///
/// Evaluated by the arithmetic-geometric mean: `K(m) = pi / (2 AGM(1, sqrt(1-m^2)))`.
pub fn elliptic_k(m: f64) -> Result<f64> {
    let m2 = m * m;
    if !(m2 < 1.0) {
        return Err(Error::EllipticDomain(m2));
    }
    let mut a = 1.0f64;
    let mut b = (1.0 - m2).sqrt();
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        if (a - b).abs() <= f64::EPSILON * a {
            break;
        }
        a = an;
        b = bn;
    }
    Ok(PI / (2.0 * a))
}

fn integrand(a: f64, d_plus: i32, d_minus: i32, v: f64) -> f64 {
    let c = v.cos();
    let root = (a * a - c * c).sqrt();
    let ratio = (c / (a + root)).powi(d_plus);
    (d_minus as f64 * v).cos() * ratio / root
}

/// Lattice Green's function by quadrature of the integral representation,
/// also at the diagonal. Returns `(value, absolute error estimate)`.
pub fn lattice2d_green_quadrature(
    alpha0: f64,
    m1: i64,
    n1: i64,
    m2: i64,
    n2: i64,
) -> Result<(f64, f64)> {
    let p = Lattice2dParams::new(alpha0)?;
    let d_m = (m2 - m1).unsigned_abs() as i32;
    let d_n = (n2 - n1).unsigned_abs() as i32;
    let d_plus = d_m + d_n;
    let d_minus = d_m - d_n;
    let (v, e) = quadrature::integrate(
        |x| integrand(p.a, d_plus, d_minus, x),
        0.0,
        PI,
        p.rel_tol,
    )?;
    Ok((v / (4.0 * PI), e / (4.0 * PI)))
}

/// Lattice Green's function with its absolute error estimate; the diagonal
/// goes through the elliptic integral, everything else through quadrature.
pub fn lattice2d_green_with_error(
    alpha0: f64,
    m1: i64,
    n1: i64,
    m2: i64,
    n2: i64,
) -> Result<(f64, f64)> {
    if m1 == m2 && n1 == n2 {
        let p = Lattice2dParams::new(alpha0)?;
        let v = elliptic_k(1.0 / p.a)? / (2.0 * PI * p.a);
        return Ok((v, 4.0 * f64::EPSILON * v));
    }
    lattice2d_green_quadrature(alpha0, m1, n1, m2, n2)
}

/// Green's function of the infinite 2-D lattice between `(m1, n1)` and
/// `(m2, n2)`.
pub fn lattice2d_green(alpha0: f64, m1: i64, n1: i64, m2: i64, n2: i64) -> Result<f64> {
    lattice2d_green_with_error(alpha0, m1, n1, m2, n2).map(|(v, _)| v)
}
