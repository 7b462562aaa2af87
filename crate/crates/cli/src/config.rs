//! JSON configuration records for the subcommands. Every field has a
//! default, so an empty config selects the documented stand-in instance.

use graphdiffuse_core::families::FamilyParams;
use serde::{Deserialize, Serialize};

pub const DEFAULT_SEED: u64 = 42;

fn default_seed() -> u64 {
    DEFAULT_SEED
}

/// Minimum-eigenvalue scan over a log-spaced absorption grid (Neumann).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EigvalsConfig {
    #[serde(default = "EigvalsConfig::default_family")]
    pub family: FamilyParams,
    #[serde(default = "EigvalsConfig::default_alpha_min")]
    pub alpha_min: f64,
    #[serde(default = "EigvalsConfig::default_alpha_max")]
    pub alpha_max: f64,
    #[serde(default = "EigvalsConfig::default_points")]
    pub points: usize,
}

impl EigvalsConfig {
    fn default_family() -> FamilyParams {
        FamilyParams::Path {
            n: 64,
            alpha0: 1.0,
            t: 0.0,
            dirichlet: false,
        }
    }
    fn default_alpha_min() -> f64 {
        1e-4
    }
    fn default_alpha_max() -> f64 {
        1.0
    }
    fn default_points() -> usize {
        25
    }
}

impl Default for EigvalsConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

/// Born truncation-error sweep over an absorption-strength grid.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BornSweepConfig {
    #[serde(default = "BornSweepConfig::default_family")]
    pub family: FamilyParams,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "BornSweepConfig::default_n_max")]
    pub n_max: usize,
    /// Spacing of the eta_max grid.
    #[serde(default = "BornSweepConfig::default_eta_step")]
    pub eta_step: f64,
    /// Explicit grid; when absent the grid runs in `eta_step` increments up
    /// to twice the restricted convergence bound.
    #[serde(default)]
    pub eta_values: Option<Vec<f64>>,
    /// Source position as a family label; default is the left boundary
    /// vertex for the path, vertex 0 otherwise.
    #[serde(default)]
    pub source_label: Option<i64>,
}

impl BornSweepConfig {
    fn default_family() -> FamilyParams {
        FamilyParams::Path {
            n: 31,
            alpha0: 1.0,
            t: 0.5,
            dirichlet: false,
        }
    }
    fn default_n_max() -> usize {
        40
    }
    fn default_eta_step() -> f64 {
        0.026
    }
}

impl Default for BornSweepConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

/// Convergence cutoff table: empirical bisection against the two bounds.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CutoffConfig {
    #[serde(default = "BornSweepConfig::default_family")]
    pub family: FamilyParams,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default = "BornSweepConfig::default_n_max")]
    pub n_max: usize,
    #[serde(default)]
    pub source_label: Option<i64>,
}

impl Default for CutoffConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

/// Closed-form vs dense-inverse check across the finite catalog.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CatalogConfig {
    #[serde(default = "CatalogConfig::default_families")]
    pub families: Vec<FamilyParams>,
    #[serde(default = "CatalogConfig::default_tolerance")]
    pub tolerance: f64,
}

impl CatalogConfig {
    fn default_families() -> Vec<FamilyParams> {
        let mut list = Vec::new();
        for alpha0 in [0.5, 2.0] {
            for t in [0.0, 0.5] {
                list.push(FamilyParams::Path {
                    n: 8,
                    alpha0,
                    t,
                    dirichlet: false,
                });
            }
            list.push(FamilyParams::Path {
                n: 8,
                alpha0,
                t: 0.0,
                dirichlet: true,
            });
        }
        list.push(FamilyParams::Loop { n: 4, alpha0: 0.4 });
        list.push(FamilyParams::Loop { n: 4, alpha0: 1.0 });
        list.push(FamilyParams::Mobius { n: 5, alpha0: 0.3 });
        list.push(FamilyParams::Mobius { n: 5, alpha0: 1.0 });
        list.push(FamilyParams::Complete {
            d: 10,
            alpha0: 0.2,
            t: 1.0,
        });
        list.push(FamilyParams::Complete {
            d: 10,
            alpha0: 1.0,
            t: 1.0,
        });
        list
    }
    fn default_tolerance() -> f64 {
        1e-10
    }
}

impl Default for CatalogConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

/// Permutohedron representation-pipeline check.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermutohedronConfig {
    #[serde(default = "PermutohedronConfig::default_order")]
    pub order: usize,
    #[serde(default = "PermutohedronConfig::default_alpha0")]
    pub alpha0: f64,
    #[serde(default = "CatalogConfig::default_tolerance")]
    pub tolerance: f64,
}

impl PermutohedronConfig {
    fn default_order() -> usize {
        4
    }
    fn default_alpha0() -> f64 {
        0.1
    }
}

impl Default for PermutohedronConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

/// Point-absorber separation sweeps.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AbsorbersConfig {
    /// "1d" (infinite path) or "2d" (infinite lattice).
    #[serde(default = "AbsorbersConfig::default_geometry")]
    pub geometry: String,
    #[serde(default = "AbsorbersConfig::default_alpha0")]
    pub alpha0: f64,
    #[serde(default = "AbsorbersConfig::default_kappa")]
    pub kappa: f64,
    /// Absorbers sit at +-k for each half-separation k in this list.
    #[serde(default = "AbsorbersConfig::default_half_separations")]
    pub half_separations: Vec<i64>,
    #[serde(default = "AbsorbersConfig::default_source")]
    pub source: i64,
    #[serde(default = "AbsorbersConfig::default_detector")]
    pub detector: i64,
}

impl AbsorbersConfig {
    fn default_geometry() -> String {
        "1d".into()
    }
    fn default_alpha0() -> f64 {
        1e-3
    }
    fn default_kappa() -> f64 {
        100.0
    }
    fn default_half_separations() -> Vec<i64> {
        (1..=20).collect()
    }
    fn default_source() -> i64 {
        0
    }
    fn default_detector() -> i64 {
        1
    }
}

impl Default for AbsorbersConfig {
    fn default() -> Self {
        serde_json::from_str("{}").expect("all fields defaulted")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_configs_default() {
        let c = BornSweepConfig::default();
        assert_eq!(c.seed, 42);
        assert_eq!(c.n_max, 40);
        assert!((c.eta_step - 0.026).abs() < 1e-15);
        let c = AbsorbersConfig::default();
        assert_eq!(c.geometry, "1d");
        assert_eq!(c.half_separations.len(), 20);
        let c = CatalogConfig::default();
        assert_eq!(c.families.len(), 12);
    }

    #[test]
    fn partial_config_overrides() {
        let c: EigvalsConfig = serde_json::from_str(
            r#"{"family":{"family":"complete","d":64,"alpha0":1.0,"t":0.0},"points":5}"#,
        )
        .unwrap();
        assert_eq!(c.points, 5);
        assert!(matches!(c.family, FamilyParams::Complete { d: 64, .. }));
        assert_eq!(c.alpha_min, 1e-4);
    }
}
