use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use braided_cli::{run_command, CliError, Options, Report, RunConfig};
use clap::{Parser, ValueEnum};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Braided doubles over finite group algebras, driven by a JSON run configuration.
#[derive(Debug, Parser)]
#[command(name = "braided", version)]
struct Args {
    /// Run configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Overrides the seed in the configuration.
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides the number of random specialisations or samples.
    #[arg(long)]
    trials: Option<usize>,
    /// Write the report here instead of the configured output or stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for per-degree parallelism (defaults to all cores).
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long, default_value_t = 100_000)]
    max_group_order: usize,
    /// Largest tensor or normal-form matrix width allowed.
    #[arg(long, default_value_t = 3000)]
    max_matrix_dim: usize,
    /// Add the wall time to the JSON report (which then varies between runs).
    #[arg(long)]
    timing: bool,
}

fn load(args: &Args) -> Result<RunConfig, CliError> {
    let text = fs::read_to_string(&args.config).map_err(|e| CliError::Input(format!("{}: {e}", args.config.display())))?;
    let mut cfg = RunConfig::from_json(&text)?;
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    if let Some(t) = args.trials {
        cfg.trials = t;
    }
    if let Some(o) = &args.output {
        cfg.output = Some(o.display().to_string());
    }
    Ok(cfg)
}

fn render(report: &Report, format: Format) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(report.to_json()),
        Format::Csv => match (&report.table, &report.error) {
            (Some(t), _) => t.to_csv(),
            (None, Some(e)) => Err(CliError::Input(e.clone())),
            (None, None) => Err(CliError::Input(format!("{} has no tabular output", report.command))),
        },
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    if let Some(k) = args.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    let cfg = match load(&args) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let options = Options { max_group_order: args.max_group_order, max_matrix_dim: args.max_matrix_dim, timing: args.timing };
    let start = Instant::now();
    let report = run_command(&cfg, &options);
    eprintln!("{}: exit {} in {} ms", report.command, report.exit_code, start.elapsed().as_millis());
    if let Some(e) = &report.error {
        eprintln!("error: {e}");
    }
    let text = match render(&report, args.format) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match &cfg.output {
        Some(path) => {
            if let Err(e) = fs::write(path, text) {
                eprintln!("error: {path}: {e}");
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(report.exit_code)
}
