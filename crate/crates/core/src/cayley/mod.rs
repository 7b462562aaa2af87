//! Cayley graphs and their Green's functions via group representations.
//!
//! Abelian groups go through their characters; general finite groups go
//! through a complete set of irreducible representations (built in Young's
//! orthogonal form for symmetric groups up to degree six).

mod fourier;
mod green;
mod group;
mod young;

pub use fourier::{fourier, inverse_fourier, m_matrix, Irrep, RepresentationSet};
pub use green::{
    characters_abelian, eigenvalue_cayley_abelian, green_abelian, green_nonabelian,
    eigenfunctions, representations_from_characters, CharacterTable,
};
pub use group::{cayley_graph, Element, FiniteGroup, GeneratorSet, GroupSpec, MAX_SYMMETRIC_DEGREE};
pub use young::{partitions, tableau_count, young_orthogonal_irreps};
