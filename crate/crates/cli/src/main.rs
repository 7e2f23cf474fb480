use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use smode::harness::{self, compare_report, format_stat, read_csv, ExperimentConfig};

#[derive(Parser)]
#[command(version, about = "Constrained benchmark runner for multi-objective DE with helper functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Run independent seeded runs per problem and write error statistics as CSV.
    Bench(BenchArgs),
    /// Compare two result files produced by `bench`.
    Compare {
        a: PathBuf,
        b: PathBuf,
    },
}

/// Flags override values read from `--config`.
#[derive(Args)]
struct BenchArgs {
    /// key=value file with any of the options below (names without `--`).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Problem ids: `all`, a range `g01..g13`, or a list `g02,g06`. [default: all]
    #[arg(long)]
    problems: Option<String>,
    /// Active helper functions: 2, 4, 6, or a list such as `f1,f3`. [default: 4]
    #[arg(long)]
    helpers: Option<String>,
    /// Fitness evaluation budget per run. [default: 5000]
    #[arg(long)]
    fes: Option<String>,
    /// Independent runs per problem. [default: 25]
    #[arg(long)]
    runs: Option<String>,
    /// Master seed. [default: 0]
    #[arg(long)]
    seed: Option<String>,
    /// Population size. [default: 180]
    #[arg(long)]
    mu: Option<String>,
    /// Parents taking part in DE variation per generation. [default: 8]
    #[arg(long)]
    lambda: Option<String>,
    /// Mutation scale factor. [default: 0.6]
    #[arg(long = "F")]
    scale: Option<String>,
    /// Crossover rate. [default: 0.95]
    #[arg(long = "Cr")]
    crossover_rate: Option<String>,
    /// Equality constraint tolerance. [default: 1e-4]
    #[arg(long)]
    delta: Option<String>,
    /// Penalty coefficient of f4. [default: 1]
    #[arg(long)]
    c4: Option<String>,
    /// Penalty coefficient of f5. [default: 10]
    #[arg(long)]
    c5: Option<String>,
    /// Penalty coefficient of f6. [default: 100]
    #[arg(long)]
    c6: Option<String>,
    /// Infeasible-child archive: on|off. [default: off]
    #[arg(long)]
    archive: Option<String>,
    /// Generations between archive injections. [default: 20]
    #[arg(long = "archive-interval")]
    archive_interval: Option<String>,
    /// Parents replaced per archive injection. [default: 3]
    #[arg(long = "archive-count")]
    archive_count: Option<String>,
    /// Selection scheme: smode (dominance) or greedy (plain DE). [default: smode]
    #[arg(long)]
    mode: Option<String>,
    /// Mutant redraws before clamping into the box. [default: 100]
    #[arg(long = "max-retries")]
    max_retries: Option<String>,
    /// Worker threads. [default: all cores]
    #[arg(long)]
    workers: Option<String>,
    /// Output CSV path; the CSV goes to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl BenchArgs {
    fn overrides(&self) -> Vec<(&'static str, String)> {
        let flags = [
            ("problems", &self.problems),
            ("helpers", &self.helpers),
            ("fes", &self.fes),
            ("runs", &self.runs),
            ("seed", &self.seed),
            ("mu", &self.mu),
            ("lambda", &self.lambda),
            ("F", &self.scale),
            ("Cr", &self.crossover_rate),
            ("delta", &self.delta),
            ("c4", &self.c4),
            ("c5", &self.c5),
            ("c6", &self.c6),
            ("archive", &self.archive),
            ("archive-interval", &self.archive_interval),
            ("archive-count", &self.archive_count),
            ("mode", &self.mode),
            ("max-retries", &self.max_retries),
            ("workers", &self.workers),
        ];
        let mut out: Vec<_> = flags
            .into_iter()
            .filter_map(|(k, v)| v.clone().map(|v| (k, v)))
            .collect();
        if let Some(path) = &self.out {
            out.push(("out", path.display().to_string()));
        }
        out
    }

    fn experiment(&self) -> anyhow::Result<ExperimentConfig> {
        let mut config = ExperimentConfig::default();
        if let Some(path) = &self.config {
            config.apply_config_file(path)?;
        }
        for (key, value) in self.overrides() {
            config.set(key, &value)?;
        }
        config.validate()?;
        Ok(config)
    }
}

fn bench(args: &BenchArgs) -> anyhow::Result<()> {
    let config = args.experiment()?;
    let engine = config.engine_config()?;
    log::info!(
        "{} problems x {} runs, helpers {}, fes {}, mu {}, lambda {}, seed {}",
        config.problems.len(),
        config.runs,
        config.helper_mode,
        engine.fes_max,
        engine.mu,
        engine.lambda,
        config.master_seed
    );
    let started = Instant::now();
    let stats = harness::run_experiment(&config)?;
    log::info!("finished in {:.1?}", started.elapsed());

    match &config.output {
        Some(path) => {
            harness::write_csv(&stats, path)
                .with_context(|| format!("writing {}", path.display()))?;
            let mut err = io::stderr().lock();
            writeln!(
                err,
                "{:<8} {:>12} {:>12} {:>12} {:>12} {:>12} {:>9}",
                "problem", "best", "median", "worst", "mean", "std", "feasible"
            )?;
            for s in &stats {
                writeln!(
                    err,
                    "{:<8} {:>12} {:>12} {:>12} {:>12} {:>12} {:>5}/{:<3}",
                    s.problem,
                    format_stat(s.best),
                    format_stat(s.median),
                    format_stat(s.worst),
                    format_stat(s.mean),
                    format_stat(s.std),
                    s.feasible_runs,
                    s.runs
                )?;
            }
            writeln!(err, "wrote {}", path.display())?;
        }
        None => harness::write_csv_to(&stats, io::stdout().lock())?,
    }
    Ok(())
}

fn compare(a: &Path, b: &Path) -> anyhow::Result<()> {
    let stats_a = read_csv(a)?;
    let stats_b = read_csv(b)?;
    let report = compare_report(&stats_a, &stats_b)?;
    println!("A: {}\nB: {}\n{report}", a.display(), b.display());
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Bench(args) => bench(args),
        Command::Compare { a, b } => compare(a, b),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
