//! Time-independent diffusion (screened Laplace) equations on graphs.
//!
//! The crate covers the full pipeline:
//!
//! - [`graph`] / [`operator`]: graph model with an explicit vertex boundary
//!   and assembly of the diffusion operator under Robin, Neumann, and
//!   Dirichlet boundary conditions;
//! - [`born`]: direct Green's functions, truncated Born series solves, and
//!   convergence certificates with truncation-error bounds;
//! - [`closed_form`]: evaluable background Green's functions for the path,
//!   loop, Mobius ladder, complete graph, Bethe lattice, and 2-D lattice;
//! - [`families`]: graph constructors and parameter records for those
//!   families;
//! - [`cayley`]: Green's functions for Cayley graphs via characters (abelian)
//!   and irreducible representations (non-abelian);
//! - [`absorbers`]: analytic scattered fields for one or several point
//!   absorbers.

pub mod absorbers;
pub mod born;
pub mod cayley;
pub mod closed_form;
pub mod error;
pub mod families;
pub mod graph;
pub mod linalg;
pub mod operator;
pub mod quadrature;

pub use error::{Error, Result};
pub use graph::{
    build_laplacian, build_normalized_laplacian, neumann_small_alpha_slope, normal_derivative,
    Graph, GraphJson,
};
pub use operator::{assemble_h0, assemble_perturbed, AbsorptionProfile, BoundaryCondition, DiffusionOperator};
