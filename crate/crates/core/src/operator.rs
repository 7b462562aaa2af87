//! Assembly of the boundary-augmented diffusion operators.
//!
//! For Robin and Neumann conditions the operator is
//!
//! ```text
//!         [ L + alpha0*I  |  (interior rows, all columns) ]
//!   H0 =  [ R             |  D                            ]
//! ```
//!
//! with `R` the boundary-interior coupling (`-1` at interior neighbors) and
//! `D` diagonal `t + #(interior neighbors)`. Dirichlet replaces the boundary
//! block with identity rows `(0 | I)`, which makes the matrix non-symmetric.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Boundary condition family. `Neumann` assembles the identical matrix as
/// `Robin(0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundaryCondition {
    Robin(f64),
    Dirichlet,
    Neumann,
}

impl BoundaryCondition {
    /// Robin parameter used during assembly; `None` for Dirichlet.
    pub fn robin_t(&self) -> Option<f64> {
        match self {
            BoundaryCondition::Robin(t) => Some(*t),
            BoundaryCondition::Neumann => Some(0.0),
            BoundaryCondition::Dirichlet => None,
        }
    }

    fn validate(&self) -> Result<()> {
        if let BoundaryCondition::Robin(t) = self {
            if *t < 0.0 || !t.is_finite() {
                return Err(Error::NegativeRobin(*t));
            }
        }
        Ok(())
    }
}

/// Assembled diffusion operator over interior-then-boundary indices.
#[derive(Debug, Clone)]
pub struct DiffusionOperator {
    pub matrix: DMatrix<f64>,
    pub alpha0: f64,
    pub bc: BoundaryCondition,
    pub n_interior: usize,
    pub n_boundary: usize,
}

impl DiffusionOperator {
    pub fn dim(&self) -> usize {
        self.n_interior + self.n_boundary
    }
}

/// Per-interior-vertex absorption perturbation with explicit support.
#[derive(Debug, Clone)]
pub struct AbsorptionProfile {
    values: Vec<f64>,
    support: Vec<usize>,
}

impl AbsorptionProfile {
    /// Absorption from a dense vector over interior indices; the support is
    /// exactly the set of nonzero entries.
    pub fn new(values: Vec<f64>) -> AbsorptionProfile {
        let support = values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v != 0.0)
            .map(|(i, _)| i)
            .collect();
        AbsorptionProfile { values, support }
    }

    /// Constant absorption `value` on `support`, zero elsewhere.
    pub fn constant_on(n_interior: usize, support: &[usize], value: f64) -> AbsorptionProfile {
        let mut values = vec![0.0; n_interior];
        for &i in support {
            values[i] = value;
        }
        AbsorptionProfile::new(values)
    }

    pub fn zero(n_interior: usize) -> AbsorptionProfile {
        AbsorptionProfile::new(vec![0.0; n_interior])
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    /// `sup |eta|`; also the spectral norm of the diagonal matrix.
    pub fn eta_max(&self) -> f64 {
        self.values.iter().fold(0.0f64, |m, &v| m.max(v.abs()))
    }

    /// Rescale so that `eta_max` becomes `target` (no-op on empty support).
    pub fn scaled_to(&self, target: f64) -> AbsorptionProfile {
        let current = self.eta_max();
        if current == 0.0 {
            return self.clone();
        }
        AbsorptionProfile::new(self.values.iter().map(|&v| v * target / current).collect())
    }

    fn validate_against(&self, n_interior: usize) -> Result<()> {
        if self.values.len() > n_interior {
            if let Some(&index) = self.support.iter().find(|&&i| i >= n_interior) {
                return Err(Error::SupportOutOfRange {
                    index,
                    interior: n_interior,
                });
            }
            return Err(Error::DimensionMismatch {
                expected: n_interior,
                got: self.values.len(),
            });
        }
        Ok(())
    }
}

/// Assemble the background operator `H0` for a positive uniform absorption.
pub fn assemble_h0(g: &Graph, alpha0: f64, bc: BoundaryCondition) -> Result<DiffusionOperator> {
    if !(alpha0 > 0.0) || !alpha0.is_finite() {
        return Err(Error::NonpositiveAbsorption(alpha0));
    }
    bc.validate()?;
    let n = g.n_interior();
    let k = g.n_boundary();
    let total = n + k;
    let mut m = DMatrix::zeros(total, total);
    for i in 0..n {
        m[(i, i)] = g.degree(i) as f64 + alpha0;
        for &j in g.neighbors(i) {
            m[(i, j)] = -1.0;
        }
    }
    match bc.robin_t() {
        Some(t) => {
            for b in n..total {
                // all neighbors of a boundary vertex are interior
                m[(b, b)] = t + g.degree(b) as f64;
                for &j in g.neighbors(b) {
                    m[(b, j)] = -1.0;
                }
            }
        }
        None => {
            for b in n..total {
                m[(b, b)] = 1.0;
            }
        }
    }
    Ok(DiffusionOperator {
        matrix: m,
        alpha0,
        bc,
        n_interior: n,
        n_boundary: k,
    })
}

/// Perturbed operator `H = H0 + alpha0 * diag(eta, 0)`.
pub fn assemble_perturbed(h0: &DiffusionOperator, eta: &AbsorptionProfile) -> Result<DiffusionOperator> {
    eta.validate_against(h0.n_interior)?;
    let mut m = h0.matrix.clone();
    for (i, &v) in eta.values().iter().enumerate() {
        m[(i, i)] += h0.alpha0 * v;
    }
    Ok(DiffusionOperator {
        matrix: m,
        alpha0: h0.alpha0,
        bc: h0.bc,
        n_interior: h0.n_interior,
        n_boundary: h0.n_boundary,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::HashMap;

    use nalgebra::DVector;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::graph::{build_laplacian, normal_derivative};
    use crate::linalg;

    fn path_graph_small(n: usize) -> Graph {
        let interior: Vec<u64> = (1..=n as u64).collect();
        let boundary = vec![0, n as u64 + 1];
        let edges: Vec<(u64, u64)> = (0..=n as u64).map(|i| (i, i + 1)).collect();
        let mut labels = HashMap::new();
        for i in 0..n {
            labels.insert(i as i64 + 1, i);
        }
        labels.insert(0, n);
        labels.insert(n as i64 + 1, n + 1);
        Graph::new(interior, boundary, edges).unwrap().with_labels(labels)
    }

    #[test]
    fn path_one_matrix_matches_display() {
        // boundary-left, interior, boundary-right ordering via the label map
        let g = path_graph_small(1);
        let h = assemble_h0(&g, 1.0, BoundaryCondition::Robin(0.0)).unwrap();
        let idx = |lbl: i64| g.label_index(lbl).unwrap();
        let expect = [
            (0, 0, 1.0),
            (0, 1, -1.0),
            (0, 2, 0.0),
            (1, 0, -1.0),
            (1, 1, 3.0),
            (1, 2, -1.0),
            (2, 0, 0.0),
            (2, 1, -1.0),
            (2, 2, 1.0),
        ];
        for (i, j, v) in expect {
            assert_eq!(h.matrix[(idx(i), idx(j))], v, "entry ({i},{j})");
        }
    }

    #[test]
    fn neumann_equals_robin_zero_bitwise() {
        let g = path_graph_small(4);
        let a = assemble_h0(&g, 0.7, BoundaryCondition::Neumann).unwrap();
        let b = assemble_h0(&g, 0.7, BoundaryCondition::Robin(0.0)).unwrap();
        assert_eq!(a.matrix, b.matrix);
    }

    #[test]
    fn dirichlet_boundary_rows_are_identity() {
        let g = path_graph_small(3);
        let h = assemble_h0(&g, 0.5, BoundaryCondition::Dirichlet).unwrap();
        let n = g.n_interior();
        for b in n..g.len() {
            for j in 0..g.len() {
                let want = if j == b { 1.0 } else { 0.0 };
                assert_eq!(h.matrix[(b, j)], want);
            }
        }
        // interior rows keep the Laplacian coupling to the boundary
        assert_eq!(h.matrix[(0, n)], -1.0);
    }

    #[test]
    fn rejects_nonpositive_alpha_and_negative_t() {
        let g = path_graph_small(2);
        assert!(matches!(
            assemble_h0(&g, 0.0, BoundaryCondition::Neumann),
            Err(Error::NonpositiveAbsorption(_))
        ));
        assert!(matches!(
            assemble_h0(&g, 1.0, BoundaryCondition::Robin(-0.1)),
            Err(Error::NegativeRobin(_))
        ));
    }

    #[test]
    fn min_eigenvalue_bound_random_graph() {
        // random connected graph, t = 0.3, alpha0 = 0.2
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..5 {
            let g = random_connected(&mut rng, 20, 5);
            let h = assemble_h0(&g, 0.2, BoundaryCondition::Robin(0.3)).unwrap();
            let lam = linalg::min_eigenvalue_sym(&h.matrix);
            assert!(lam >= 0.2 - 1e-12, "lambda_min = {lam}");
        }
    }

    #[test]
    fn perturbed_zero_eta_is_identical() {
        let g = path_graph_small(4);
        let h0 = assemble_h0(&g, 0.9, BoundaryCondition::Robin(0.4)).unwrap();
        let h = assemble_perturbed(&h0, &AbsorptionProfile::zero(4)).unwrap();
        assert_eq!(h.matrix, h0.matrix);
    }

    #[test]
    fn perturbed_single_entry_diagonal_bump() {
        let g = path_graph_small(4);
        let h0 = assemble_h0(&g, 0.5, BoundaryCondition::Neumann).unwrap();
        let eta = AbsorptionProfile::constant_on(4, &[2], 1.0);
        let h = assemble_perturbed(&h0, &eta).unwrap();
        let diff = &h.matrix - &h0.matrix;
        assert_eq!(diff[(2, 2)], 0.5);
        assert_eq!(diff.iter().filter(|&&v| v != 0.0).count(), 1);
    }

    #[test]
    fn perturbed_rejects_out_of_range_support() {
        let g = path_graph_small(3);
        let h0 = assemble_h0(&g, 0.5, BoundaryCondition::Neumann).unwrap();
        let eta = AbsorptionProfile::new(vec![0.0, 0.0, 0.0, 0.0, 1.0]);
        assert!(matches!(
            assemble_perturbed(&h0, &eta),
            Err(Error::SupportOutOfRange { index: 4, .. })
        ));
    }

    #[test]
    fn perturbed_solve_matches_dense_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let g = path_graph_small(8);
        let h0 = assemble_h0(&g, 0.6, BoundaryCondition::Robin(0.3)).unwrap();
        let eta = AbsorptionProfile::new((0..8).map(|_| rng.random_range(0.0..1.0)).collect());
        let h = assemble_perturbed(&h0, &eta).unwrap();
        let f = DVector::from_fn(10, |_, _| rng.random_range(-1.0..1.0));
        let u = linalg::SymmetricFactor::new(&h.matrix).unwrap().solve_vec(&f);
        let u_lu = linalg::lu_solve(&h.matrix, &f).unwrap();
        let rel = (&u - &u_lu).amax() / u.amax();
        assert!(rel < 1e-12, "relative deviation {rel}");
    }

    #[test]
    fn neumann_solution_has_zero_normal_derivative() {
        let g = path_graph_small(6);
        let h = assemble_h0(&g, 0.8, BoundaryCondition::Neumann).unwrap();
        let mut f = DVector::zeros(8);
        f[2] = 1.0; // interior source, zero boundary data
        let u = linalg::SymmetricFactor::new(&h.matrix).unwrap().solve_vec(&f);
        for &y in g.boundary_ids() {
            assert!(normal_derivative(&g, &u, y).unwrap().abs() < 1e-12);
        }
    }

    #[test]
    fn dirichlet_is_large_t_limit() {
        // || u_{t=1e8} - u_D ||_inf < 1e-6 on a path of length 8
        let g = path_graph_small(8);
        let t = 1e8;
        let robin = assemble_h0(&g, 0.5, BoundaryCondition::Robin(t)).unwrap();
        let dirichlet = assemble_h0(&g, 0.5, BoundaryCondition::Dirichlet).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f: DVector<f64> = DVector::from_fn(8, |_, _| rng.random_range(-1.0..1.0));
        let gdata: DVector<f64> = DVector::from_fn(2, |_, _| rng.random_range(-1.0..1.0));
        let mut rhs_robin = DVector::zeros(10);
        let mut rhs_dir = DVector::zeros(10);
        for i in 0..8 {
            rhs_robin[i] = f[i];
            rhs_dir[i] = f[i];
        }
        for b in 0..2 {
            rhs_robin[8 + b] = t * gdata[b];
            rhs_dir[8 + b] = gdata[b];
        }
        let u_t = linalg::SymmetricFactor::new(&robin.matrix).unwrap().solve_vec(&rhs_robin);
        let u_d = linalg::lu_solve(&dirichlet.matrix, &rhs_dir).unwrap();
        assert!((u_t - u_d).amax() < 1e-6);
    }

    fn random_connected(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Graph {
        // spanning tree over the interior, then random extra edges, then one
        // interior attachment per boundary vertex
        let interior: Vec<u64> = (0..n as u64).collect();
        let boundary: Vec<u64> = (n as u64..(n + k) as u64).collect();
        let mut edges: Vec<(u64, u64)> = Vec::new();
        for i in 1..n as u64 {
            let j = rng.random_range(0..i);
            edges.push((j, i));
        }
        for _ in 0..n {
            let a = rng.random_range(0..n as u64);
            let b = rng.random_range(0..n as u64);
            if a != b && !edges.contains(&(a.min(b), a.max(b))) {
                edges.push((a.min(b), a.max(b)));
            }
        }
        for b in 0..k as u64 {
            let a = rng.random_range(0..n as u64);
            edges.push((a, n as u64 + b));
        }
        Graph::new(interior, boundary, edges).unwrap()
    }

    proptest! {
        #[test]
        fn assembled_robin_operator_is_exactly_symmetric(seed in 0u64..500, t in 0.0f64..3.0) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.random_range(2..12);
            let k = rng.random_range(1..4);
            let g = random_connected(&mut rng, n, k);
            let h = assemble_h0(&g, 0.3, BoundaryCondition::Robin(t)).unwrap();
            let diff = &h.matrix - h.matrix.transpose();
            prop_assert!(diff.iter().all(|&v| v == 0.0));
        }

        #[test]
        fn interior_row_sums_equal_alpha0(seed in 0u64..500) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.random_range(2..12);
            let g = random_connected(&mut rng, n, 2);
            let alpha0 = 0.25;
            let h = assemble_h0(&g, alpha0, BoundaryCondition::Neumann).unwrap();
            let l = build_laplacian(&g);
            for i in 0..n {
                let s: f64 = h.matrix.row(i).sum();
                prop_assert!((s - alpha0).abs() < 1e-12);
                // H0 interior row = Laplacian row + alpha0 on the diagonal
                for j in 0..g.len() {
                    let want = l[(i, j)] + if i == j { alpha0 } else { 0.0 };
                    prop_assert_eq!(h.matrix[(i, j)], want);
                }
            }
        }
    }
}
