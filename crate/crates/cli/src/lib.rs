//! File formats, reports and the driver behind the `pid` command.

pub mod error;
pub mod format;
pub mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use pid_core::pid::DEFAULT_ZERO_TOLERANCE;
use pid_core::{systems, JointDistribution, PIDecomposition, RedundancyLattice, MAX_PREDICTORS};

pub use error::{CliError, Result};
use report::Unit;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Dot,
}

/// Partial information decomposition of discrete distributions.
#[derive(Debug, Parser)]
#[command(name = "pid", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format (default: table, or dot for `lattice`)
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Report in nats instead of bits
    #[arg(long, global = true)]
    pub nats: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose I(S; R) into partial information atoms
    Decompose {
        path: PathBuf,
        /// Target variable (default: the first)
        #[arg(long)]
        target: Option<String>,
        /// Skip I_min evaluations below zero-information nodes
        #[arg(long)]
        prune: bool,
        /// Tolerance under which I_min counts as zero when pruning
        #[arg(long, default_value_t = DEFAULT_ZERO_TOLERANCE)]
        zero_tolerance: f64,
    },
    /// Print the redundancy lattice as a Hasse diagram
    Lattice {
        /// Number of predictors (default: taken from --annotate)
        #[arg(long)]
        predictors: Option<usize>,
        /// Distribution whose atoms and I_min annotate the nodes
        #[arg(long)]
        annotate: Option<PathBuf>,
        #[arg(long)]
        target: Option<String>,
    },
    /// Interaction information and its expansion into atoms
    Interaction {
        path: PathBuf,
        #[arg(long)]
        target: Option<String>,
    },
    /// Write the bundled reference distributions
    Examples {
        #[arg(long, default_value = ".")]
        out: PathBuf,
    },
}

/// Bundled reference systems: file name, distribution, description.
pub fn bundled_examples() -> Vec<(&'static str, JointDistribution, &'static str)> {
    vec![
        (
            "fig4a.json",
            systems::fig4a(),
            "Three equiprobable outcomes (S,R1,R2): R1 settles whether S=2, R2 whether S=1, and only the pair settles S=0. Atoms: {1}{2}=log2(3)-1, {1}={2}={12}=1/3.",
        ),
        (
            "xor.json",
            systems::xor(),
            "S = R1 xor R2 with uniform inputs. Atoms: {12}=1, all others 0.",
        ),
        (
            "copies2.json",
            systems::copies2(),
            "Uniform binary S copied into R1 and R2. Atoms: {1}{2}=1, all others 0.",
        ),
        (
            "parity3.json",
            systems::parity3(),
            "S = R1 xor R2 xor R3 with uniform inputs. Interaction information +1. Atoms: {123}=1, all others 0.",
        ),
        (
            "copy3.json",
            systems::copy3(),
            "Uniform binary S copied into R1, R2 and R3. Interaction information +1. Atoms: {1}{2}{3}=1, all others 0.",
        ),
    ]
}

fn retarget(d: JointDistribution, target: Option<&str>) -> Result<(String, JointDistribution)> {
    match target {
        None => Ok((d.variable_names()[0].clone(), d)),
        Some(name) => {
            let position = d
                .position_of(name)
                .ok_or_else(|| CliError::Usage(format!("unknown target variable {name:?}")))?;
            Ok((name.to_string(), d.with_target(position)?))
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(CliError::Output)
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("report serializes");
    text.push('\n');
    emit(out, &text)
}

fn decompose_file(path: &Path, target: Option<&str>) -> Result<(String, PIDecomposition)> {
    let (name, d) = retarget(format::load(path)?, target)?;
    Ok((name, pid_core::decompose(&d)?))
}

/// Runs one command, writing data to `out` and diagnostics to `err`.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let unit = if cli.nats { Unit::Nats } else { Unit::Bits };
    match &cli.command {
        Command::Decompose {
            path,
            target,
            prune,
            zero_tolerance,
        } => {
            let (name, d) = retarget(format::load(path)?, target.as_deref())?;
            let pid = if *prune {
                if zero_tolerance.is_nan() || *zero_tolerance <= 0.0 {
                    return Err(CliError::Usage("--zero-tolerance must be positive".into()));
                }
                let pruned = pid_core::decompose_pruned(&d, *zero_tolerance)?;
                let _ = writeln!(
                    err,
                    "evaluated {} nodes, skipped {}",
                    pruned.evaluated, pruned.skipped
                );
                pruned.decomposition
            } else {
                pid_core::decompose(&d)?
            };
            match cli.format.unwrap_or(Format::Table) {
                Format::Table => emit(out, &report::decomposition_table(&name, &pid, unit)),
                Format::Json => emit_json(out, &report::decomposition_json(&name, &pid, unit)),
                Format::Dot => emit(out, &report::lattice_dot(pid.lattice(), Some(&pid), unit)),
            }
        }
        Command::Lattice {
            predictors,
            annotate,
            target,
        } => {
            let pid = match annotate {
                Some(path) => Some(decompose_file(path, target.as_deref())?.1),
                None => None,
            };
            let n = match (predictors, &pid) {
                (Some(n), _) => *n,
                (None, Some(pid)) => pid.lattice().num_predictors(),
                (None, None) => {
                    return Err(CliError::Usage(
                        "lattice needs --predictors or --annotate".into(),
                    ))
                }
            };
            if !(1..=MAX_PREDICTORS).contains(&n) {
                return Err(CliError::Usage(format!(
                    "--predictors {n} is outside the supported range 1..={MAX_PREDICTORS}"
                )));
            }
            let lattice = match &pid {
                Some(pid) if pid.lattice().num_predictors() == n => pid.lattice().clone(),
                Some(pid) => {
                    return Err(CliError::Usage(format!(
                        "--predictors {n} does not match the {} predictors of the annotating distribution",
                        pid.lattice().num_predictors()
                    )))
                }
                None => Arc::new(RedundancyLattice::build(n)?),
            };
            match cli.format.unwrap_or(Format::Dot) {
                Format::Dot => emit(out, &report::lattice_dot(&lattice, pid.as_ref(), unit)),
                Format::Json => emit_json(out, &report::lattice_json(&lattice, pid.as_ref(), unit)),
                Format::Table => Err(CliError::Usage(
                    "lattice supports --format dot or json".into(),
                )),
            }
        }
        Command::Interaction { path, target } => {
            let (_, d) = retarget(format::load(path)?, target.as_deref())?;
            let report = pid_core::interaction_decomposition_report(&d)?;
            match cli.format.unwrap_or(Format::Table) {
                Format::Table => emit(out, &report::interaction_table(&report, unit)),
                Format::Json => emit_json(out, &report::interaction_json(&report, unit)),
                Format::Dot => Err(CliError::Usage(
                    "interaction supports --format table or json".into(),
                )),
            }
        }
        Command::Examples { out: dir } => {
            fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
            for (file, d, comment) in bundled_examples() {
                let path = dir.join(file);
                format::save(&path, &d, Some(comment))?;
                let _ = writeln!(err, "wrote {}", path.display());
            }
            Ok(())
        }
    }
}
