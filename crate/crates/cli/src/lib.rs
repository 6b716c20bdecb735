//! The `wedge` command line: summary and contraction tables, clustering
//! ECDFs and the invariant suite over edge-list files.

pub mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use wedge_core::verify::{run_suite, Fault, VerifyOptions};
use wedge_core::wedge::DEFAULT_INCIDENCE_CAP;
use wedge_core::{parse_partition, read_edge_list, EdgeList, Error, Graph};

use report::{clustering_ecdf, contraction, ecdf_svg, AnalysisRow, ContractionRow};

#[derive(Debug, Parser)]
#[command(name = "wedge", version, about = "Wedge operators and two-walk transfer diagnostics for edge lists")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Summary invariants per graph: n, m, triangles, m2, omega, Vc, Vt, dom.
    /// `dom` comes from a greedy dominating set and is algorithm-dependent.
    Analyze(Common),
    /// Ego-traversing contraction diagnostics per graph. `ratio` depends on
    /// the greedy dominating set.
    Contract {
        #[command(flatten)]
        common: Common,
        /// Also write B, M, B^2 and the overcount B^2 - M as CSV per graph.
        #[arg(long)]
        emit_matrices: bool,
        /// Use this partition instead of the ego-traversing one (single input only).
        #[arg(long, value_name = "FILE")]
        partition: Option<PathBuf>,
    },
    /// ECDF of local clustering coefficients as (graph, x, F) rows; with
    /// --out also an SVG step plot.
    Ecdf(Common),
    /// Run the invariant suite on the inputs and on seeded random graphs.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Skip incidence Gram checks beyond this many columns.
        #[arg(long, value_name = "N", default_value_t = DEFAULT_INCIDENCE_CAP)]
        max_incidence_cols: usize,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

#[derive(Debug, Args)]
pub struct Common {
    /// Edge-list files: `u v [weight]` per line, `#` comments.
    #[arg(value_name = "FILE")]
    pub inputs: Vec<PathBuf>,
    /// Write outputs into this directory instead of standard output.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

/// Exit status: 0 success, 1 input error, 2 invariant violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    InputError = 1,
    InvariantViolation = 2,
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s as u8)
    }
}

fn classify(e: &Error) -> Status {
    match e {
        Error::InvariantViolation(_) => Status::InvariantViolation,
        _ => Status::InputError,
    }
}

fn graph_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

struct Failure {
    status: Status,
    message: String,
}

/// Loads and processes every input in parallel; results come back in input
/// order.
fn per_graph<T: Send>(
    inputs: &[PathBuf],
    work: impl Fn(&str, &EdgeList) -> wedge_core::Result<T> + Sync,
) -> Vec<Result<T, Failure>> {
    inputs
        .par_iter()
        .map(|path| {
            let name = graph_name(path);
            let el = read_edge_list(path).map_err(|e| Failure {
                status: Status::InputError,
                message: format!("{}: {e}", path.display()),
            })?;
            work(&name, &el).map_err(|e| Failure {
                status: classify(&e),
                message: format!("{}: {e}", path.display()),
            })
        })
        .collect()
}

/// Splits results into successes and the worst status, reporting each
/// failure on stderr.
fn settle<T>(results: Vec<Result<T, Failure>>) -> (Vec<T>, Status) {
    let mut status = Status::Ok;
    let mut ok = Vec::new();
    for r in results {
        match r {
            Ok(v) => ok.push(v),
            Err(f) => {
                eprintln!("error: {}", f.message);
                status = status.max(f.status);
            }
        }
    }
    (ok, status)
}

fn emit(out: Option<&Path>, file: &str, text: &str) -> anyhow::Result<()> {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            let path = dir.join(file);
            fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn csv(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut text = format!("{header}\n");
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    text
}

pub fn run(cli: Cli) -> anyhow::Result<Status> {
    match cli.command {
        Command::Analyze(common) => analyze(&common),
        Command::Contract {
            common,
            emit_matrices,
            partition,
        } => contract(&common, emit_matrices, partition.as_deref()),
        Command::Ecdf(common) => ecdf(&common),
        Command::Verify {
            common,
            seed,
            max_incidence_cols,
            inject_fault,
        } => verify(&common, seed, max_incidence_cols, inject_fault),
    }
}

fn analyze(common: &Common) -> anyhow::Result<Status> {
    let (rows, status) = settle(per_graph(&common.inputs, |name, el| AnalysisRow::compute(name, &el.graph)));
    emit(
        common.out.as_deref(),
        "analyze.csv",
        &csv(AnalysisRow::HEADER, rows.iter().map(AnalysisRow::to_csv)),
    )?;
    Ok(status)
}

fn contract(common: &Common, emit_matrices: bool, partition: Option<&Path>) -> anyhow::Result<Status> {
    let partition_text = match partition {
        Some(path) => {
            if common.inputs.len() != 1 {
                bail!("--partition needs exactly one input graph, got {}", common.inputs.len());
            }
            Some(fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?)
        }
        None => None,
    };
    let results = per_graph(&common.inputs, |name, el| {
        let p = partition_text.as_deref().map(|t| parse_partition(t, el)).transpose()?;
        let d = contraction(&el.graph, p.as_ref())?;
        Ok((ContractionRow::from_diagnostics(name, &d), d))
    });
    let (done, status) = settle(results);
    for (row, d) in &done {
        let r = d.blocks;
        let diagonal: Vec<i64> = (0..r).map(|a| d.overcount[(a, a)]).collect();
        let off: i64 = d.overcount.off_diagonal_sum().unwrap_or(i64::MAX);
        eprintln!("{}: overcount diagonal {diagonal:?}, off-diagonal total {off}", row.name);
        if emit_matrices {
            let dir = common.out.as_deref().unwrap_or(Path::new("."));
            for (suffix, m) in [("B", &d.b), ("M", &d.m), ("B2", &d.b_squared), ("overcount", &d.overcount)] {
                emit(Some(dir), &format!("{}.{suffix}.csv", row.name), &m.to_csv())?;
            }
        }
    }
    emit(
        common.out.as_deref(),
        "contract.csv",
        &csv(ContractionRow::HEADER, done.iter().map(|(row, _)| row.to_csv())),
    )?;
    Ok(status)
}

fn ecdf(common: &Common) -> anyhow::Result<Status> {
    let results = per_graph(&common.inputs, |name, el| Ok((name.to_string(), clustering_ecdf(&el.graph)?)));
    let (curves, status) = settle(results);
    let rows = curves
        .iter()
        .flat_map(|(name, steps)| steps.iter().map(move |(x, f)| format!("{name},{x:?},{f:?}")));
    emit(common.out.as_deref(), "ecdf.csv", &csv("graph,x,F", rows))?;
    if let Some(dir) = common.out.as_deref() {
        emit(Some(dir), "ecdf.svg", &ecdf_svg(&curves))?;
    }
    Ok(status)
}

fn verify(common: &Common, seed: u64, max_incidence_cols: usize, inject_fault: bool) -> anyhow::Result<Status> {
    let loaded = per_graph(&common.inputs, |name, el| Ok((name.to_string(), el.graph.clone())));
    let (inputs, load_status): (Vec<(String, Graph)>, Status) = settle(loaded);
    let opts = VerifyOptions {
        seed,
        max_incidence_cols,
        fault: inject_fault.then_some(Fault::CorruptTriadic),
        ..VerifyOptions::default()
    };
    let checks = run_suite(&inputs, &opts);
    let mut report = String::new();
    for c in &checks {
        report.push_str(&c.to_string());
        report.push('\n');
    }
    let failed = checks.iter().filter(|c| c.failed()).count();
    report.push_str(&format!("{} checks, {failed} failed\n", checks.len()));
    emit(common.out.as_deref(), "verify.txt", &report)?;
    Ok(if failed > 0 {
        Status::InvariantViolation
    } else {
        load_status
    })
}
