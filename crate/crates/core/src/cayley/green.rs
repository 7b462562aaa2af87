//! Background Green's functions of Cayley graphs from characters and from
//! irreducible representations.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::born::{GreensMatrix, Provenance};
use crate::cayley::fourier::{m_matrix, Irrep, RepresentationSet};
use crate::cayley::group::{Element, FiniteGroup, GeneratorSet, GroupSpec};
use crate::error::{Error, Result};

/// Character table of a finite abelian product of cyclic groups:
/// `table[(x, k)] = chi_k(x) = exp(2 pi i sum_j k_j x_j / n_j)`,
/// with rows and columns enumerated like the group elements.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub table: DMatrix<Complex64>,
}

impl CharacterTable {
    pub fn order(&self) -> usize {
        self.table.nrows()
    }

    /// Value `chi_k(x)`.
    pub fn value(&self, x: usize, k: usize) -> Complex64 {
        self.table[(x, k)]
    }
}

/// All `|G|` characters of an abelian cyclic product.
pub fn characters_abelian(group: &FiniteGroup) -> Result<CharacterTable> {
    let orders = match group.spec() {
        GroupSpec::CyclicProduct { orders } => orders.clone(),
        _ => {
            return Err(Error::InvalidParameter(
                "characters need an abelian cyclic product".into(),
            ))
        }
    };
    let n = group.order();
    let tuple = |i: usize| match group.element(i) {
        Element::Tuple(t) => t.clone(),
        _ => unreachable!(),
    };
    let table = DMatrix::from_fn(n, n, |x, k| {
        let xv = tuple(x);
        let kv = tuple(k);
        let phase: f64 = xv
            .iter()
            .zip(kv.iter())
            .zip(orders.iter())
            .map(|((&xi, &ki), &nj)| (ki as f64) * (xi as f64) / (nj as f64))
            .sum();
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * phase)
    });
    Ok(CharacterTable { table })
}

/// Laplacian eigenvalue attached to one character:
/// `lambda_chi = |S| - sum_{s in S} conj(chi(s))`. The imaginary part cancels
/// for a symmetric generator set and is asserted below `1e-12`.
pub fn eigenvalue_cayley_abelian(
    chars: &CharacterTable,
    s: &GeneratorSet,
    chi: usize,
) -> Result<f64> {
    let mut acc = Complex64::new(s.len() as f64, 0.0);
    for &g in s.indices() {
        acc -= chars.value(g, chi).conj();
    }
    if acc.im.abs() >= 1e-12 {
        return Err(Error::ResidualImaginary(acc.im));
    }
    Ok(acc.re)
}

/// Solve the uniform-absorption problem on an abelian Cayley graph by the
/// character expansion: with characters normalized by `1/sqrt(|G|)` the
/// character matrix is unitary, so
/// `u = X diag(1/(lambda+alpha0)) X^dagger f / |G|` with the unnormalized
/// table `X`.
pub fn green_abelian(
    group: &FiniteGroup,
    s: &GeneratorSet,
    alpha0: f64,
    f: &DVector<f64>,
) -> Result<DVector<f64>> {
    if !(alpha0 > 0.0) {
        return Err(Error::NonpositiveAbsorption(alpha0));
    }
    let n = group.order();
    if f.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: f.len(),
        });
    }
    let chars = characters_abelian(group)?;
    let fc = f.map(|v| Complex64::new(v, 0.0));
    let fhat = chars.table.adjoint() * &fc;
    let mut scaled = fhat;
    for k in 0..n {
        let lambda = eigenvalue_cayley_abelian(&chars, s, k)?;
        scaled[k] /= Complex64::new(lambda + alpha0, 0.0);
    }
    let u = &chars.table * scaled / Complex64::new(n as f64, 0.0);
    realify_vector(&u)
}

fn realify_vector(u: &DVector<Complex64>) -> Result<DVector<f64>> {
    let worst = u.iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
    let scale = u.iter().map(|z| z.re.abs()).fold(1.0f64, f64::max);
    if worst > 1e-10 * scale {
        return Err(Error::ResidualImaginary(worst));
    }
    Ok(u.map(|z| z.re))
}

fn realify_matrix(m: &DMatrix<Complex64>) -> Result<DMatrix<f64>> {
    let worst = m.iter().map(|z| z.im.abs()).fold(0.0f64, f64::max);
    if worst > 1e-10 {
        return Err(Error::ResidualImaginary(worst));
    }
    Ok(m.map(|z| z.re))
}

/// Degree-one representation set built from the character table, for feeding
/// abelian groups through the non-abelian pipeline.
pub fn representations_from_characters(
    group: &FiniteGroup,
) -> Result<RepresentationSet> {
    let chars = characters_abelian(group)?;
    let n = group.order();
    let irreps = (0..n)
        .map(|k| Irrep {
            label: format!("chi_{k}"),
            degree: 1,
            matrices: (0..n)
                .map(|x| DMatrix::from_element(1, 1, chars.value(x, k)))
                .collect(),
        })
        .collect();
    Ok(RepresentationSet { irreps })
}

/// Background Green's matrix of a Cayley graph from a complete set of
/// irreducible representations.
///
/// For each representation the Hermitian matrix `M(rho) = sum_S rho(g)` is
/// diagonalized; each eigenpair `(nu, v)` and column slot `k` yields (via the
/// inverse Fourier transform of the single-column coefficient matrix) an
/// eigenvector `u(g) = (d/|G|) [rho(g^{-1}) v]_k` of the operator with
/// eigenvalue `|S| + alpha0 - nu`. The collection is orthonormalized within
/// eigenvalue groups and assembled into `G0 = sum (1/lambda) phi phi*`.
pub fn green_nonabelian(
    group: &FiniteGroup,
    s: &GeneratorSet,
    reps: &RepresentationSet,
    alpha0: f64,
) -> Result<GreensMatrix> {
    if !(alpha0 > 0.0) {
        return Err(Error::NonpositiveAbsorption(alpha0));
    }
    reps.check_complete(group.order())?;
    let pairs = eigenfunctions(group, s, reps, alpha0)?;
    let order = group.order();

    // Group by eigenvalue, then orthonormalize each group.
    let mut sorted: Vec<(f64, DVector<Complex64>)> = pairs;
    sorted.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut green = DMatrix::<Complex64>::zeros(order, order);
    let mut kept = 0usize;
    let mut start = 0usize;
    while start < sorted.len() {
        let lambda = sorted[start].0;
        let mut stop = start + 1;
        while stop < sorted.len() && (sorted[stop].0 - lambda).abs() <= 1e-9 * (1.0 + lambda.abs()) {
            stop += 1;
        }
        let basis = orthonormalize(&sorted[start..stop], lambda)?;
        kept += basis.len();
        for phi in &basis {
            // G0 += (1/lambda) phi phi*
            let scale = Complex64::new(1.0 / lambda, 0.0);
            green.gerc(scale, phi, phi, Complex64::new(1.0, 0.0));
        }
        start = stop;
    }
    if kept != order {
        return Err(Error::IncompleteRepresentations {
            got: kept,
            order,
        });
    }
    Ok(GreensMatrix {
        entries: realify_matrix(&green)?,
        alpha0,
        provenance: Provenance::Spectral,
    })
}

/// Raw operator eigenpairs `(lambda, u)` before orthonormalization.
pub fn eigenfunctions(
    group: &FiniteGroup,
    s: &GeneratorSet,
    reps: &RepresentationSet,
    alpha0: f64,
) -> Result<Vec<(f64, DVector<Complex64>)>> {
    let order = group.order();
    let mut pairs = Vec::with_capacity(reps.sum_squared_degrees());
    for rep in &reps.irreps {
        let m = m_matrix(rep, s);
        let herm_gap = (&m - m.adjoint()).map(|z| z.norm()).max();
        if herm_gap > 1e-10 {
            return Err(Error::InvalidParameter(format!(
                "M({}) is not Hermitian (gap {herm_gap:e}); representation must be unitary",
                rep.label
            )));
        }
        let eig = m.symmetric_eigen();
        let scale = rep.degree as f64 / order as f64;
        for j in 0..rep.degree {
            let nu = eig.eigenvalues[j];
            let v = eig.eigenvectors.column(j);
            let lambda = s.len() as f64 + alpha0 - nu;
            // w(g) = rho(g^{-1}) v, one column per group element
            let transformed: Vec<DVector<Complex64>> = (0..order)
                .map(|g| &rep.matrices[group.invert(g)] * v)
                .collect();
            for k in 0..rep.degree {
                let u = DVector::from_fn(order, |g, _| transformed[g][k] * scale);
                pairs.push((lambda, u));
            }
        }
    }
    Ok(pairs)
}

/// Modified Gram-Schmidt with one re-orthogonalization pass; vectors whose
/// remainder drops below `1e-12` of their original size trigger a degeneracy
/// error naming the eigenvalue group.
fn orthonormalize(
    vectors: &[(f64, DVector<Complex64>)],
    lambda: f64,
) -> Result<Vec<DVector<Complex64>>> {
    let mut basis: Vec<DVector<Complex64>> = Vec::with_capacity(vectors.len());
    for (_, v) in vectors {
        let original = v.norm();
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let coeff = b.dotc(&w);
                w -= b * coeff;
            }
        }
        let remaining = w.norm();
        if remaining <= 1e-12 * original.max(1.0) {
            return Err(Error::DegenerateEigenGroup(lambda));
        }
        basis.push(w / Complex64::new(remaining, 0.0));
    }
    Ok(basis)
}
