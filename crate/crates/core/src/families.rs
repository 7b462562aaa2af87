//! Graph constructors and parameter records for the catalogued families.
//!
//! Finite families come with a label map so the conventional vertex
//! numbering (path positions `0..=n+1`, ladder positions `0..=2n+1`, ...)
//! keeps working against the interior-first internal ordering.

use std::collections::HashMap;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::born::{greens_direct, GreensMatrix, Provenance};
use crate::closed_form;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::operator::{assemble_h0, BoundaryCondition, DiffusionOperator};

/// JSON parameter record:
/// `{"family":"path|loop|mobius|complete|bethe|lattice2d", "n"/"d"/"k":int, "alpha0":float, "t":float}`.
///
/// `path` additionally accepts `"dirichlet": true` to select the Dirichlet
/// operator instead of Robin(t).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyParams {
    Path {
        n: usize,
        alpha0: f64,
        #[serde(default)]
        t: f64,
        #[serde(default)]
        dirichlet: bool,
    },
    /// Loop on `2n+2` vertices.
    Loop { n: usize, alpha0: f64 },
    /// Mobius ladder on `2n+2` vertices, `n` odd.
    Mobius { n: usize, alpha0: f64 },
    /// Complete graph on `d` interior vertices, each with its own boundary
    /// vertex.
    Complete { d: usize, alpha0: f64, t: f64 },
    /// Bethe lattice with coordination number `k` (infinite; entrywise only).
    Bethe { k: usize, alpha0: f64 },
    /// Infinite 2-D lattice (entrywise only).
    Lattice2d { alpha0: f64 },
}

impl FamilyParams {
    pub fn alpha0(&self) -> f64 {
        match *self {
            FamilyParams::Path { alpha0, .. }
            | FamilyParams::Loop { alpha0, .. }
            | FamilyParams::Mobius { alpha0, .. }
            | FamilyParams::Complete { alpha0, .. }
            | FamilyParams::Bethe { alpha0, .. }
            | FamilyParams::Lattice2d { alpha0 } => alpha0,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilyParams::Path { dirichlet: false, .. } => "path",
            FamilyParams::Path { dirichlet: true, .. } => "path_dirichlet",
            FamilyParams::Loop { .. } => "loop",
            FamilyParams::Mobius { .. } => "mobius",
            FamilyParams::Complete { .. } => "complete",
            FamilyParams::Bethe { .. } => "bethe",
            FamilyParams::Lattice2d { .. } => "lattice2d",
        }
    }

    pub fn is_finite(&self) -> bool {
        !matches!(self, FamilyParams::Bethe { .. } | FamilyParams::Lattice2d { .. })
    }
}

/// Path of length `n`: interior `1..=n`, boundary `0` and `n+1`.
pub fn path_graph(n: usize) -> Graph {
    let interior: Vec<u64> = (1..=n as u64).collect();
    let boundary = vec![0, n as u64 + 1];
    let edges: Vec<(u64, u64)> = (0..=n as u64).map(|i| (i, i + 1)).collect();
    let mut labels = HashMap::new();
    for i in 1..=n {
        labels.insert(i as i64, i - 1);
    }
    labels.insert(0, n);
    labels.insert(n as i64 + 1, n + 1);
    Graph::new(interior, boundary, edges)
        .expect("path construction is valid")
        .with_labels(labels)
}

/// Loop on `2n+2` vertices `0..=2n+1`, no boundary.
pub fn loop_graph(n: usize) -> Graph {
    let total = 2 * n + 2;
    let ids: Vec<u64> = (0..total as u64).collect();
    let edges: Vec<(u64, u64)> = (0..total as u64).map(|i| (i, (i + 1) % total as u64)).collect();
    let labels = (0..total).map(|i| (i as i64, i)).collect();
    Graph::new(ids, vec![], edges)
        .expect("loop construction is valid")
        .with_labels(labels)
}

/// Mobius ladder on `2n+2` vertices: the loop plus the `n+1` antipodal rungs.
pub fn mobius_graph(n: usize) -> Graph {
    let total = 2 * n + 2;
    let ids: Vec<u64> = (0..total as u64).collect();
    let mut edges: Vec<(u64, u64)> =
        (0..total as u64).map(|i| (i, (i + 1) % total as u64)).collect();
    for i in 0..=n as u64 {
        edges.push((i, i + n as u64 + 1));
    }
    let labels = (0..total).map(|i| (i as i64, i)).collect();
    Graph::new(ids, vec![], edges)
        .expect("mobius construction is valid")
        .with_labels(labels)
}

/// Complete graph on `d` interior vertices `0..d-1`, each attached to its own
/// boundary vertex `d..2d-1`.
pub fn complete_graph(d: usize) -> Graph {
    let interior: Vec<u64> = (0..d as u64).collect();
    let boundary: Vec<u64> = (d as u64..2 * d as u64).collect();
    let mut edges = Vec::new();
    for i in 0..d as u64 {
        for j in (i + 1)..d as u64 {
            edges.push((i, j));
        }
        edges.push((i, i + d as u64));
    }
    let labels = (0..2 * d).map(|i| (i as i64, i)).collect();
    Graph::new(interior, boundary, edges)
        .expect("complete construction is valid")
        .with_labels(labels)
}

/// The finite graph behind a family record; infinite families are rejected.
pub fn family_graph(params: &FamilyParams) -> Result<Graph> {
    match *params {
        FamilyParams::Path { n, .. } => Ok(path_graph(n)),
        FamilyParams::Loop { n, .. } => Ok(loop_graph(n)),
        FamilyParams::Mobius { n, .. } => {
            if n % 2 == 0 {
                return Err(Error::EvenMobius(n));
            }
            Ok(mobius_graph(n))
        }
        FamilyParams::Complete { d, .. } => Ok(complete_graph(d)),
        FamilyParams::Bethe { .. } | FamilyParams::Lattice2d { .. } => Err(
            Error::InvalidParameter(format!("{} family is infinite", params.name())),
        ),
    }
}

/// Assemble the background operator for a finite family record.
pub fn family_h0(params: &FamilyParams) -> Result<DiffusionOperator> {
    let g = family_graph(params)?;
    let bc = match *params {
        FamilyParams::Path { dirichlet: true, .. } => BoundaryCondition::Dirichlet,
        FamilyParams::Path { t, .. } | FamilyParams::Complete { t, .. } => {
            BoundaryCondition::Robin(t)
        }
        _ => BoundaryCondition::Neumann,
    };
    assemble_h0(&g, params.alpha0(), bc)
}

/// Materialize the closed-form Green's matrix of a finite family, aligned
/// with the assembled operator's internal index order.
pub fn closed_form_green(params: &FamilyParams) -> Result<GreensMatrix> {
    let g = family_graph(params)?;
    let dim = g.len();
    let name = params.name();
    let entry: Box<dyn Fn(usize, usize) -> Result<f64>> = match *params {
        FamilyParams::Path {
            n,
            alpha0,
            t,
            dirichlet,
        } => {
            if dirichlet {
                Box::new(move |i, j| closed_form::path_green_dirichlet(n, alpha0, i, j))
            } else {
                Box::new(move |i, j| closed_form::path_green_robin(n, alpha0, t, i, j))
            }
        }
        FamilyParams::Loop { n, alpha0 } => {
            Box::new(move |i, j| closed_form::loop_green(n, alpha0, i, j))
        }
        FamilyParams::Mobius { n, alpha0 } => {
            Box::new(move |i, j| closed_form::mobius_green(n, alpha0, i, j))
        }
        FamilyParams::Complete { d, alpha0, t } => {
            Box::new(move |i, j| closed_form::complete_green(d, alpha0, t, i, j))
        }
        _ => {
            return Err(Error::InvalidParameter(format!(
                "{name} has no finite closed-form matrix"
            )))
        }
    };
    let mut entries = DMatrix::zeros(dim, dim);
    for label_i in 0..dim {
        let ii = g.label_index(label_i as i64).expect("family label map");
        for label_j in 0..dim {
            let jj = g.label_index(label_j as i64).expect("family label map");
            entries[(ii, jj)] = entry(label_i, label_j)?;
        }
    }
    Ok(GreensMatrix {
        entries,
        alpha0: params.alpha0(),
        provenance: Provenance::ClosedForm(name),
    })
}

/// Dense inverse of the assembled family operator (the oracle the closed
/// forms are checked against).
pub fn direct_green(params: &FamilyParams) -> Result<GreensMatrix> {
    greens_direct(&family_h0(params)?)
}

/// Max entrywise deviation between the closed form and the dense inverse.
pub fn catalog_deviation(params: &FamilyParams) -> Result<f64> {
    let closed = closed_form_green(params)?;
    let direct = direct_green(params)?;
    Ok(crate::linalg::max_abs(&(&closed.entries - &direct.entries)))
}
