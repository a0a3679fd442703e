//! Command-line interface: exact expectations, Monte Carlo estimation, and
//! the identity-verification sweep. JSON goes to stdout, logs to stderr.
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input,
//! 3 degenerate geometry, 4 sampling failure.

mod exact;
mod io;
mod manifest;
mod mc_cmd;
mod verify;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperslice::{Body, Error, OrientationMode, Result, SimulationConfig};

use crate::io::OrientationSource;
use crate::manifest::RunManifest;
use crate::verify::{KPolicy, VerifyParams};

#[derive(Parser)]
#[command(
    name = "hyperslice",
    version,
    about = "Vertex statistics of k-dimensional slices of hypercubes and parallelotopes",
    after_help = "Dimensions are capped at n <= 20 to keep subset enumeration interactive.\n\
                  Seeds default to the HYPERSLICE_SEED environment variable, then 0."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact expected vertex count and face probability table for one orientation.
    Exact(ExactArgs),
    /// Monte Carlo estimate of the expected vertex count over random slices.
    Mc(McArgs),
    /// Sweep dimensions and seeded orientations, checking the 2^k identity.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ExactArgs {
    /// Ambient dimension.
    #[arg(long)]
    n: usize,
    /// Slice dimension.
    #[arg(long)]
    k: usize,
    /// Orientation source: "axis", "random:<seed>", or a file path.
    #[arg(long)]
    orientation: String,
    /// Body file (first line n, then n generator rows, then the base row).
    /// Defaults to the cube [-1,1]^n.
    #[arg(long)]
    body: Option<PathBuf>,
    /// Worker threads (results do not depend on this).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    /// Orientation vectors drawn uniformly from the unit sphere per sample.
    Isotropic,
    /// The first k coordinate axes.
    Axis,
    /// A fixed orientation from --orientation.
    Fixed,
}

#[derive(Args)]
struct McArgs {
    /// Ambient dimension.
    #[arg(long)]
    n: usize,
    /// Slice dimension.
    #[arg(long)]
    k: usize,
    /// Number of slice samples.
    #[arg(long)]
    samples: u64,
    /// RNG seed (falls back to HYPERSLICE_SEED, then 0).
    #[arg(long, env = "HYPERSLICE_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Isotropic)]
    mode: ModeArg,
    /// Orientation source for --mode fixed: "axis", "random:<seed>", or a file.
    #[arg(long)]
    orientation: Option<String>,
    /// Translations drawn per orientation before redrawing it.
    #[arg(long, default_value_t = 1)]
    resample_per_orientation: u64,
    /// Write the vertex-count histogram as CSV (count,frequency).
    #[arg(long)]
    hist: Option<PathBuf>,
    /// Body file; defaults to the cube [-1,1]^n.
    #[arg(long)]
    body: Option<PathBuf>,
    /// Worker threads (results do not depend on this).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Dimension range "a..b" (inclusive) or a single value.
    #[arg(long, default_value = "1..8")]
    n: String,
    /// Slice dimensions: "all", a single value, or "a..b" (inclusive).
    #[arg(long, default_value = "all")]
    k: String,
    /// Random orientations per (n, k) cell.
    #[arg(long, default_value_t = 20)]
    trials: u64,
    /// RNG seed (falls back to HYPERSLICE_SEED, then 0).
    #[arg(long, env = "HYPERSLICE_SEED", default_value_t = 0)]
    seed: u64,
    /// Tolerance on |expectation - 2^k|.
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Body file; restricts --n to the body's dimension.
    #[arg(long)]
    body: Option<PathBuf>,
    /// Worker threads (results do not depend on this).
    #[arg(long)]
    threads: Option<usize>,
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(cli, start) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(exit_code(&err));
        }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::InvalidInput(_) | Error::Internal(_) => 2,
        Error::DegenerateOrientation(_) | Error::DegenerateZonotope(_) => 3,
        Error::SamplingFailure { .. } => 4,
    }
}

fn init_threads(threads: Option<usize>) {
    if let Some(t) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("warning: could not configure {t} threads: {e}");
        }
    }
}

fn load_body(n: usize, path: &Option<PathBuf>) -> Result<Body> {
    match path {
        None => Body::cube(n),
        Some(path) => {
            let body = io::read_body_file(path)?;
            if body.n() != n {
                return Err(Error::InvalidInput(format!(
                    "body file {} is {}-dimensional, but --n is {}",
                    path.display(),
                    body.n(),
                    n
                )));
            }
            Ok(body)
        }
    }
}

fn body_source_label(path: &Option<PathBuf>) -> String {
    path.as_ref()
        .map(|p| p.display().to_string())
        .unwrap_or_else(|| "cube".to_string())
}

fn emit<T: serde::Serialize>(report: &T) -> Result<()> {
    let json = serde_json::to_string_pretty(report)
        .map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
    println!("{json}");
    Ok(())
}

fn run(cli: Cli, start: Instant) -> Result<i32> {
    match cli.command {
        Command::Exact(args) => {
            init_threads(args.threads);
            let source = OrientationSource::parse(&args.orientation)?;
            let body = load_body(args.n, &args.body)?;
            let orientation = source.resolve(args.n, args.k)?;
            let mut manifest = RunManifest::new("exact", source.seed(), args.threads);
            manifest.config = serde_json::json!({
                "n": args.n,
                "k": args.k,
                "orientation_source": args.orientation,
                "body_source": body_source_label(&args.body),
            });
            let mut report = exact::run(&body, &orientation, manifest)?;
            report.manifest.duration_seconds = start.elapsed().as_secs_f64();
            emit(&report)?;
            Ok(0)
        }
        Command::Mc(args) => {
            init_threads(args.threads);
            let body = load_body(args.n, &args.body)?;
            let orientation_mode = match (args.mode, &args.orientation) {
                (ModeArg::Isotropic, None) => OrientationMode::Isotropic,
                (ModeArg::Axis, None) => OrientationMode::AxisAligned,
                (ModeArg::Fixed, Some(source_text)) => {
                    let source = OrientationSource::parse(source_text)?;
                    OrientationMode::Fixed {
                        orientation: source.resolve(args.n, args.k)?,
                    }
                }
                (ModeArg::Fixed, None) => {
                    return Err(Error::InvalidInput(
                        "--mode fixed requires --orientation".into(),
                    ))
                }
                (_, Some(_)) => {
                    return Err(Error::InvalidInput(
                        "--orientation only applies to --mode fixed".into(),
                    ))
                }
            };
            let config = SimulationConfig::new(
                args.n,
                args.k,
                args.samples,
                args.seed,
                orientation_mode,
                body,
            )?
            .with_translation_resample(args.resample_per_orientation)?;
            let mut manifest = RunManifest::new("mc", Some(args.seed), args.threads);
            manifest.config = serde_json::json!({
                "n": args.n,
                "k": args.k,
                "samples": args.samples,
                "seed": args.seed,
                "mode": format!("{:?}", args.mode).to_lowercase(),
                "orientation_source": args.orientation,
                "resample_per_orientation": args.resample_per_orientation,
                "hist": args.hist.as_ref().map(|p| p.display().to_string()),
                "body_source": body_source_label(&args.body),
            });
            let mut report = mc_cmd::run(&config, manifest)?;
            if let Some(hist_path) = &args.hist {
                mc_cmd::write_histogram_csv(hist_path, &report.report)?;
            }
            report.manifest.duration_seconds = start.elapsed().as_secs_f64();
            emit(&report)?;
            Ok(0)
        }
        Command::Verify(args) => {
            init_threads(args.threads);
            let params = VerifyParams {
                n_values: verify::parse_inclusive_range(&args.n)?,
                k_policy: KPolicy::parse(&args.k)?,
                trials: args.trials,
                seed: args.seed,
                tolerance: args.tol,
                body: match &args.body {
                    None => None,
                    Some(path) => Some(io::read_body_file(path)?),
                },
            };
            let mut manifest = RunManifest::new("verify", Some(args.seed), args.threads);
            manifest.config = serde_json::json!({
                "n": args.n,
                "k": args.k,
                "trials": args.trials,
                "seed": args.seed,
                "tol": args.tol,
                "body_source": body_source_label(&args.body),
            });
            let mut report = verify::run(&params, manifest)?;
            report.manifest.duration_seconds = start.elapsed().as_secs_f64();
            let pass = report.overall_pass;
            emit(&report)?;
            Ok(if pass { 0 } else { 1 })
        }
    }
}
