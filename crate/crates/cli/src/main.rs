use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use qiso_cli::config::{parse_suites, RunConfig, RunConfigFile};
use qiso_cli::grid::{grid_exit_code, run_grid, write_summary, GridFile};
use qiso_cli::run::{render_text, run, write_artifacts, EXIT_CONFIG, EXIT_IO};

/// Verify the quantum isometry action on a truncated Podles sphere.
///
/// Exit codes: 0 all checks passed, 1 numeric tolerance exceeded, 2 exact
/// identity failed, 3 invalid configuration, 4 output could not be written.
#[derive(Debug, Parser)]
#[command(name = "qiso", version)]
struct Args {
    /// TOML run configuration; command-line flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Deformation parameter, 0 < mu < 1.
    #[arg(long)]
    mu: Option<f64>,
    /// Sphere parameter, c > 0.
    #[arg(long)]
    c: Option<f64>,
    /// Character parameter for the non-compactness witness.
    #[arg(long)]
    theta: Option<f64>,
    /// Basis vectors per leg.
    #[arg(long = "M")]
    m: Option<usize>,
    /// Indices excluded at the truncation edge.
    #[arg(long)]
    buffer: Option<usize>,
    /// Cutoff of the quotient to the finite free product.
    #[arg(long = "N")]
    n_quotient: Option<usize>,
    /// Suite to run (repeatable); defaults to all.
    #[arg(long = "suite")]
    suites: Vec<String>,
    /// TOML grid of `mu`, `c`, `theta`, `M` lists; runs every combination.
    #[arg(long)]
    grid_file: Option<PathBuf>,
    /// Output directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for the randomized symbolic checks.
    #[arg(long)]
    seed: Option<u64>,
    /// Run the negative control: drop the y factor at index 3.
    #[arg(long)]
    violate: bool,
}

fn build_config(args: &Args) -> anyhow::Result<RunConfig> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &args.config {
        cfg = RunConfigFile::load(path)?.apply(cfg)?;
    }
    macro_rules! flag {
        ($($arg:ident => $field:ident),*) => {$(
            if let Some(v) = args.$arg.clone() {
                cfg.$field = v;
            }
        )*};
    }
    flag!(mu => mu, c => c, theta => theta, m => m, buffer => buffer, n_quotient => n_quotient, out => output_dir, seed => seed);
    if !args.suites.is_empty() {
        cfg.suites = parse_suites(&args.suites)?;
    }
    cfg.violate |= args.violate;
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_CONFIG as u8) } else { ExitCode::SUCCESS };
        }
    };
    let cfg = match build_config(&args) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(EXIT_CONFIG as u8);
        }
    };
    let code = match &args.grid_file {
        Some(path) => run_grid_mode(path, &cfg),
        None => run_single(&cfg),
    };
    ExitCode::from(code as u8)
}

fn run_single(cfg: &RunConfig) -> i32 {
    let report = match run(cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    print!("{}", render_text(&report));
    if let Err(e) = write_artifacts(&report, &cfg.output_dir).with_context(|| format!("writing {}", cfg.output_dir.display())) {
        eprintln!("error: {e:#}");
        return EXIT_IO;
    }
    report.exit_code()
}

fn run_grid_mode(path: &std::path::Path, template: &RunConfig) -> i32 {
    let grid = match GridFile::load(path) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_CONFIG;
        }
    };
    let rows = run_grid(&grid, template);
    for row in &rows {
        println!(
            "point {:3}  mu={} c={} theta={} M={}  {}",
            row.index,
            row.config.mu,
            row.config.c,
            row.config.theta,
            row.config.m,
            row.status()
        );
    }
    let summary = template.output_dir.join("summary.csv");
    if let Err(e) = write_summary(&rows, &summary) {
        eprintln!("error: writing {}: {e}", summary.display());
        return EXIT_IO;
    }
    grid_exit_code(&rows)
}
