//! `graphdiffuse` — experiment harness for diffusion problems on graphs.
//!
//! ```text
//! graphdiffuse <subcommand> --config <file.json> --out <file.csv> [--seed N]
//! ```
//!
//! Exit codes: 0 on success, 1 on usage or runtime errors, 2 when a check
//! subcommand ran but a tolerance failed.

mod commands;
mod config;
mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;

use commands::{absorbers, checks, experiments};

#[derive(Parser)]
#[command(
    name = "graphdiffuse",
    version,
    about = "Diffusion on graphs: eigenvalue scans, Born sweeps, cutoff tables, catalog checks, and absorber sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON config; defaults are used when omitted.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output CSV path; stdout when omitted.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Overrides the seed recorded in the config.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum Neumann eigenvalue over an absorption grid.
    Eigvals,
    /// Truncated-series error sweep over absorption strengths.
    BornSweep,
    /// Empirical convergence cutoff against the two sufficient bounds.
    Cutoff,
    /// Closed forms vs dense inversion across the finite catalog.
    CatalogCheck,
    /// Representation-built Green's matrix vs dense inverse.
    Permutohedron,
    /// Point-absorber separation sweeps (1d path or 2d lattice).
    Absorbers,
}

fn load_config<T: DeserializeOwned + Default>(path: &Option<PathBuf>) -> Result<T> {
    match path {
        Some(p) => {
            let text = fs::read_to_string(p)
                .with_context(|| format!("cannot read config {}", p.display()))?;
            serde_json::from_str(&text).with_context(|| format!("bad config {}", p.display()))
        }
        None => Ok(T::default()),
    }
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    // every CSV header records a seed, even for deterministic subcommands
    let header_seed = cli.seed.unwrap_or(config::DEFAULT_SEED);
    match cli.command {
        Command::Eigvals => {
            let cfg = load_config::<config::EigvalsConfig>(&cli.config)?;
            Ok((experiments::run_eigvals(&cfg, header_seed)?, true))
        }
        Command::BornSweep => {
            let mut cfg = load_config::<config::BornSweepConfig>(&cli.config)?;
            if let Some(seed) = cli.seed {
                cfg.seed = seed;
            }
            Ok((experiments::run_born_sweep(&cfg)?, true))
        }
        Command::Cutoff => {
            let mut cfg = load_config::<config::CutoffConfig>(&cli.config)?;
            if let Some(seed) = cli.seed {
                cfg.seed = seed;
            }
            Ok((experiments::run_cutoff(&cfg)?, true))
        }
        Command::CatalogCheck => {
            let cfg = load_config::<config::CatalogConfig>(&cli.config)?;
            let out = checks::run_catalog_check(&cfg, header_seed)?;
            Ok((out.csv, out.passed))
        }
        Command::Permutohedron => {
            let cfg = load_config::<config::PermutohedronConfig>(&cli.config)?;
            let out = checks::run_permutohedron(&cfg, header_seed)?;
            Ok((out.csv, out.passed))
        }
        Command::Absorbers => {
            let cfg = load_config::<config::AbsorbersConfig>(&cli.config)?;
            Ok((absorbers::run_absorbers(&cfg, header_seed)?, true))
        }
    }
}

/// Write to stdout, ignoring a closed pipe (`graphdiffuse ... | head`).
fn print_stdout(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print_stdout(&e.to_string());
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok((csv, passed)) => {
            let write_result = match &cli.out {
                Some(path) => fs::write(path, &csv)
                    .with_context(|| format!("cannot write {}", path.display())),
                None => {
                    print_stdout(&csv);
                    Ok(())
                }
            };
            if let Err(e) = write_result {
                eprintln!("error: {e:#}");
                return ExitCode::from(1);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("check failed tolerance; see output");
                ExitCode::from(2)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
