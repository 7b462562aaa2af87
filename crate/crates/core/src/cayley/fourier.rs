//! Representation sets and the Fourier transform on finite groups.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::cayley::group::{FiniteGroup, GeneratorSet};
use crate::error::{Error, Result};

/// One irreducible representation: matrices indexed by group element.
#[derive(Debug, Clone)]
pub struct Irrep {
    pub label: String,
    pub degree: usize,
    pub matrices: Vec<DMatrix<Complex64>>,
}

/// A maximal set of inequivalent irreducible representations.
#[derive(Debug, Clone)]
pub struct RepresentationSet {
    pub irreps: Vec<Irrep>,
}

impl RepresentationSet {
    pub fn sum_squared_degrees(&self) -> usize {
        self.irreps.iter().map(|r| r.degree * r.degree).sum()
    }

    pub fn check_complete(&self, order: usize) -> Result<()> {
        let got = self.sum_squared_degrees();
        if got != order {
            return Err(Error::IncompleteRepresentations { got, order });
        }
        Ok(())
    }
}

/// `M(rho) = sum_{g in S} rho(g)`; Hermitian for a unitary representation of
/// a symmetric generator set.
pub fn m_matrix(rho: &Irrep, s: &GeneratorSet) -> DMatrix<Complex64> {
    let mut m = DMatrix::zeros(rho.degree, rho.degree);
    for &g in s.indices() {
        m += &rho.matrices[g];
    }
    m
}

/// Fourier transform: `F[f](rho) = sum_g f(g) rho(g)`, one coefficient matrix
/// per irreducible representation.
pub fn fourier(
    group: &FiniteGroup,
    reps: &RepresentationSet,
    f: &DVector<Complex64>,
) -> Vec<DMatrix<Complex64>> {
    reps.irreps
        .iter()
        .map(|rep| {
            let mut m = DMatrix::zeros(rep.degree, rep.degree);
            for g in 0..group.order() {
                m += &rep.matrices[g] * f[g];
            }
            m
        })
        .collect()
}

/// Inverse Fourier transform:
/// `f(g) = (1/|G|) sum_rho d_rho Tr(rho(g^{-1}) h(rho))`.
pub fn inverse_fourier(
    group: &FiniteGroup,
    reps: &RepresentationSet,
    coeffs: &[DMatrix<Complex64>],
) -> DVector<Complex64> {
    let order = group.order();
    let mut f = DVector::zeros(order);
    for g in 0..order {
        let g_inv = group.invert(g);
        let mut acc = Complex64::new(0.0, 0.0);
        for (rep, h) in reps.irreps.iter().zip(coeffs.iter()) {
            acc += (&rep.matrices[g_inv] * h).trace() * (rep.degree as f64);
        }
        f[g] = acc / (order as f64);
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::young::young_orthogonal_irreps;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_signal(n: usize, seed: u64) -> DVector<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        DVector::from_fn(n, |_, _| {
            Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
        })
    }

    #[test]
    fn fourier_round_trip_s3_s4() {
        for n in [3usize, 4] {
            let group = FiniteGroup::symmetric(n).unwrap();
            let reps = young_orthogonal_irreps(&group).unwrap();
            reps.check_complete(group.order()).unwrap();
            let f = random_signal(group.order(), 17 + n as u64);
            let back = inverse_fourier(&group, &reps, &fourier(&group, &reps, &f));
            let err = (&back - &f).map(|z| z.norm()).max();
            assert!(err < 1e-12, "round-trip error {err} at n={n}");
        }
    }

    #[test]
    fn convolution_becomes_multiplication() {
        // f * h with (f*h)(g) = sum_r f(r^{-1}) h(r g)
        let group = FiniteGroup::symmetric(3).unwrap();
        let reps = young_orthogonal_irreps(&group).unwrap();
        let f = random_signal(6, 5);
        let h = random_signal(6, 6);
        let mut conv = DVector::zeros(6);
        for g in 0..6 {
            let mut acc = Complex64::new(0.0, 0.0);
            for r in 0..6 {
                acc += f[group.invert(r)] * h[group.multiply(r, g)];
            }
            conv[g] = acc;
        }
        let lhs = fourier(&group, &reps, &conv);
        let ff = fourier(&group, &reps, &f);
        let fh = fourier(&group, &reps, &h);
        for ((l, a), b) in lhs.iter().zip(ff.iter()).zip(fh.iter()) {
            let err = (l - a * b).map(|z| z.norm()).max();
            assert!(err < 1e-12);
        }
    }
}
