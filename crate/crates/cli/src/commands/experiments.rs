//! Eigenvalue scans, Born sweeps, and cutoff tables.

use anyhow::{anyhow, Context, Result};
use nalgebra::DVector;
use rayon::prelude::*;

use graphdiffuse_core::born::{
    born_partial_sums, convergence_report, empirical_cutoff, select_support,
};
use graphdiffuse_core::families::{closed_form_green, family_graph, family_h0, FamilyParams};
use graphdiffuse_core::graph::neumann_small_alpha_slope;
use graphdiffuse_core::operator::{assemble_h0, assemble_perturbed, AbsorptionProfile, BoundaryCondition};
use graphdiffuse_core::{linalg, Graph};

use crate::config::{BornSweepConfig, CutoffConfig, EigvalsConfig};
use crate::output::{num, Csv};

pub fn family_size(family: &FamilyParams) -> usize {
    match *family {
        FamilyParams::Path { n, .. }
        | FamilyParams::Loop { n, .. }
        | FamilyParams::Mobius { n, .. } => n,
        FamilyParams::Complete { d, .. } => d,
        FamilyParams::Bethe { k, .. } => k,
        FamilyParams::Lattice2d { .. } => 0,
    }
}

pub fn family_t(family: &FamilyParams) -> f64 {
    match *family {
        FamilyParams::Path { t, .. } | FamilyParams::Complete { t, .. } => t,
        _ => 0.0,
    }
}

/// Minimum Neumann eigenvalue against the small-absorption asymptote over a
/// log-spaced grid.
pub fn run_eigvals(config: &EigvalsConfig, header_seed: u64) -> Result<String> {
    let graph = family_graph(&config.family)?;
    let slope = neumann_small_alpha_slope(&graph)?;
    if config.points < 2 || !(config.alpha_min > 0.0) || config.alpha_max <= config.alpha_min {
        return Err(anyhow!("need points >= 2 and 0 < alpha_min < alpha_max"));
    }
    let ratio = config.alpha_max / config.alpha_min;
    let grid: Vec<f64> = (0..config.points)
        .map(|i| config.alpha_min * ratio.powf(i as f64 / (config.points - 1) as f64))
        .collect();
    let rows: Vec<(f64, f64)> = grid
        .par_iter()
        .map(|&alpha0| {
            let h = assemble_h0(&graph, alpha0, BoundaryCondition::Neumann)?;
            Ok((alpha0, linalg::min_eigenvalue_sym(&h.matrix)))
        })
        .collect::<Result<_>>()?;
    let mut csv = Csv::new(config, Some(header_seed))?;
    csv.comment(&format!("asymptotic slope {slope}"));
    csv.columns(&["alpha0", "lambda_min", "asymptotic_bound"]);
    for (alpha0, lambda_min) in rows {
        csv.row(&[num(alpha0), num(lambda_min), num(slope * alpha0)]);
    }
    Ok(csv.finish())
}

/// Shared setup for sweeps: graph, operator, closed-form background Green's
/// matrix, seeded support, and source vector.
struct SweepInstance {
    graph: Graph,
    h0: graphdiffuse_core::DiffusionOperator,
    g0: graphdiffuse_core::born::GreensMatrix,
    support: Vec<usize>,
    source: DVector<f64>,
}

fn sweep_instance(
    family: &FamilyParams,
    seed: u64,
    source_label: Option<i64>,
) -> Result<SweepInstance> {
    let graph = family_graph(family)?;
    let h0 = family_h0(family)?;
    let g0 = closed_form_green(family)?;
    let n_interior = graph.n_interior();
    let support = select_support(n_interior, n_interior / 4, seed);
    let label = source_label.unwrap_or(0);
    let idx = graph
        .label_index(label)
        .with_context(|| format!("source label {label} not in family"))?;
    let mut source = DVector::zeros(graph.len());
    source[idx] = 1.0;
    Ok(SweepInstance {
        graph,
        h0,
        g0,
        support,
        source,
    })
}

/// Truncated-series error against the direct solve over an eta_max grid.
pub fn run_born_sweep(config: &BornSweepConfig) -> Result<String> {
    let inst = sweep_instance(&config.family, config.seed, config.source_label)?;
    let alpha0 = config.family.alpha0();
    let restricted_bound = 1.0 / (alpha0 * inst.g0.restricted_norm(&inst.support));
    let grid: Vec<f64> = match &config.eta_values {
        Some(values) => values.clone(),
        None => {
            let count = ((2.0 * restricted_bound) / config.eta_step).ceil() as usize;
            (1..=count.max(1)).map(|k| k as f64 * config.eta_step).collect()
        }
    };
    let per_eta: Vec<Vec<(f64, usize, f64, f64, f64)>> = grid
        .par_iter()
        .map(|&eta_max| {
            let eta = AbsorptionProfile::constant_on(inst.graph.n_interior(), &inst.support, eta_max);
            let report = convergence_report(&inst.g0, &eta, alpha0);
            let h = assemble_perturbed(&inst.h0, &eta)?;
            let exact = linalg::lu_solve(&h.matrix, &inst.source)?;
            let sums = born_partial_sums(&inst.g0, &eta, alpha0, config.n_max, &inst.source)?;
            Ok(sums
                .iter()
                .enumerate()
                .map(|(n, u)| {
                    (
                        eta_max,
                        n,
                        (u - &exact).amax(),
                        report.global_margin,
                        report.restricted_margin,
                    )
                })
                .collect())
        })
        .collect::<Result<_>>()?;
    let mut csv = Csv::new(config, Some(config.seed))?;
    csv.comment(&format!("support {:?}", inst.support));
    csv.columns(&[
        "family", "n", "alpha0", "t", "seed", "eta_max", "N", "linf_error", "margin_31",
        "margin_32",
    ]);
    let name = config.family.name();
    let size = family_size(&config.family);
    let t = family_t(&config.family);
    for rows in per_eta {
        for (eta_max, n, err, m31, m32) in rows {
            csv.row(&[
                name.into(),
                size.to_string(),
                num(alpha0),
                num(t),
                config.seed.to_string(),
                num(eta_max),
                n.to_string(),
                num(err),
                num(m31),
                num(m32),
            ]);
        }
    }
    Ok(csv.finish())
}

/// Empirical convergence cutoff (bisection) against the two sufficient
/// bounds.
pub fn run_cutoff(config: &CutoffConfig) -> Result<String> {
    let inst = sweep_instance(&config.family, config.seed, config.source_label)?;
    let alpha0 = config.family.alpha0();
    let empirical = empirical_cutoff(&inst.h0, &inst.g0, &inst.support, &inst.source, config.n_max)?;
    let global_bound = 1.0 / (alpha0 * inst.g0.spectral_norm());
    let restricted_bound = 1.0 / (alpha0 * inst.g0.restricted_norm(&inst.support));
    let mut csv = Csv::new(config, Some(config.seed))?;
    csv.comment(&format!("support {:?}", inst.support));
    csv.columns(&["method", "eta_max_cutoff"]);
    csv.row(&["empirical".into(), num(empirical)]);
    csv.row(&["global_norm_bound".into(), num(global_bound)]);
    csv.row(&["restricted_norm_bound".into(), num(restricted_bound)]);
    Ok(csv.finish())
}
