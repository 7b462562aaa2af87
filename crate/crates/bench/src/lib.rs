//! Shared fixtures for the criterion benches.

use nalgebra::DVector;

use graphdiffuse_core::born::GreensMatrix;
use graphdiffuse_core::families::{path_graph, FamilyParams};
use graphdiffuse_core::operator::{assemble_h0, AbsorptionProfile, BoundaryCondition, DiffusionOperator};

pub fn path_operator(n: usize) -> DiffusionOperator {
    let g = path_graph(n);
    assemble_h0(&g, 1.0, BoundaryCondition::Robin(0.5)).unwrap()
}

pub fn path_background(n: usize) -> GreensMatrix {
    graphdiffuse_core::families::closed_form_green(&FamilyParams::Path {
        n,
        alpha0: 1.0,
        t: 0.5,
        dirichlet: false,
    })
    .unwrap()
}

pub fn boundary_source(dim: usize) -> DVector<f64> {
    let mut f = DVector::zeros(dim);
    f[dim - 2] = 1.0;
    f
}

pub fn quarter_support(n: usize) -> AbsorptionProfile {
    let support = graphdiffuse_core::born::select_support(n, n / 4, 42);
    AbsorptionProfile::constant_on(n, &support, 0.3)
}
