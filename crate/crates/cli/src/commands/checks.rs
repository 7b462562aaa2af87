//! Catalog and representation-pipeline checks; these return a pass flag so
//! the binary can exit 2 on a failed tolerance.

use anyhow::Result;
use nalgebra::DVector;

use graphdiffuse_core::born::greens_direct;
use graphdiffuse_core::cayley::{
    cayley_graph, green_abelian, green_nonabelian, young_orthogonal_irreps, FiniteGroup,
    GeneratorSet,
};
use graphdiffuse_core::closed_form::loop_green;
use graphdiffuse_core::families::catalog_deviation;
use graphdiffuse_core::linalg;
use graphdiffuse_core::operator::{assemble_h0, BoundaryCondition};

use crate::commands::experiments::{family_size, family_t};
use crate::config::{CatalogConfig, PermutohedronConfig};
use crate::output::{num, Csv};

pub struct CheckOutcome {
    pub csv: String,
    pub passed: bool,
}

/// Closed forms against dense inversion, one row per family instance.
pub fn run_catalog_check(config: &CatalogConfig, header_seed: u64) -> Result<CheckOutcome> {
    let mut csv = Csv::new(config, Some(header_seed))?;
    csv.columns(&["family", "size", "alpha0", "t", "max_deviation", "pass"]);
    let mut passed = true;
    for family in &config.families {
        let dev = catalog_deviation(family)?;
        let ok = dev < config.tolerance;
        passed &= ok;
        csv.row(&[
            family.name().into(),
            family_size(family).to_string(),
            num(family.alpha0()),
            num(family_t(family)),
            num(dev),
            ok.to_string(),
        ]);
    }
    Ok(CheckOutcome {
        csv: csv.finish(),
        passed,
    })
}

/// Representation-built Green's matrix of the permutohedron against the
/// dense inverse, plus an abelian sanity column (loop via characters); the
/// matrix itself is emitted for plotting.
pub fn run_permutohedron(config: &PermutohedronConfig, header_seed: u64) -> Result<CheckOutcome> {
    let group = FiniteGroup::symmetric(config.order)?;
    let s = GeneratorSet::adjacent_transpositions(&group)?;
    let reps = young_orthogonal_irreps(&group)?;
    let sum_sq: usize = reps.sum_squared_degrees();
    reps.check_complete(group.order())?;

    let green = green_nonabelian(&group, &s, &reps, config.alpha0)?;
    let graph = cayley_graph(&group, &s)?;
    let h0 = assemble_h0(&graph, config.alpha0, BoundaryCondition::Neumann)?;
    let direct = greens_direct(&h0)?;
    let deviation = linalg::max_abs(&(&green.entries - &direct.entries));

    // loop on 10 vertices through the character expansion
    let loop_group = FiniteGroup::cyclic_product(&[10])?;
    let loop_s = GeneratorSet::new(&loop_group, [1, 9])?;
    let mut f = DVector::zeros(10);
    f[0] = 1.0;
    let u = green_abelian(&loop_group, &loop_s, config.alpha0, &f)?;
    let mut abelian_dev = 0.0f64;
    for i in 0..10 {
        abelian_dev = abelian_dev.max((u[i] - loop_green(4, config.alpha0, i, 0)?).abs());
    }

    let passed = deviation < config.tolerance && abelian_dev < config.tolerance;
    let mut csv = Csv::new(config, Some(header_seed))?;
    csv.comment(&format!("sum_squared_degrees={sum_sq}"));
    csv.comment(&format!("max_deviation={deviation:e}"));
    csv.comment(&format!("abelian_loop_deviation={abelian_dev:e}"));
    csv.columns(&["i", "j", "green"]);
    let n = green.entries.nrows();
    for i in 0..n {
        for j in 0..n {
            csv.row(&[i.to_string(), j.to_string(), num(green.entries[(i, j)])]);
        }
    }
    Ok(CheckOutcome {
        csv: csv.finish(),
        passed,
    })
}
