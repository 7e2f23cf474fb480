//! Experiment runner: independent seeded runs per problem, aggregated into
//! error-value statistics.

mod compare;
mod report;
mod stats;

pub use compare::{compare_report, Comparison, ComparisonRow, Verdict};
pub use report::{format_sci, format_stat, read_csv, write_csv, write_csv_to, HEADER, NA};
pub use stats::{na_last, RunStatistics};

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::engine::{self, RunResult, Selection, SmodeConfig};
use crate::error::{Error, Result};
use crate::fitness::{Helper, HelperSet};
use crate::problems::{self, parse_problem_list};
use crate::rng::derive_seed;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HelperMode {
    /// `{f1, f2}`
    Two,
    /// `{f1, f2, f3, f4}`
    Four,
    /// `{f1, ..., f6}`
    Six,
    Custom(Vec<Helper>),
}

impl HelperMode {
    pub fn helpers(&self) -> Vec<Helper> {
        match self {
            HelperMode::Two => Helper::ALL[..2].to_vec(),
            HelperMode::Four => Helper::ALL[..4].to_vec(),
            HelperMode::Six => Helper::ALL.to_vec(),
            HelperMode::Custom(h) => h.clone(),
        }
    }
}

impl fmt::Display for HelperMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HelperMode::Two => f.write_str("2"),
            HelperMode::Four => f.write_str("4"),
            HelperMode::Six => f.write_str("6"),
            HelperMode::Custom(h) => {
                let names: Vec<String> = h.iter().map(Helper::to_string).collect();
                f.write_str(&names.join("+"))
            }
        }
    }
}

impl FromStr for HelperMode {
    type Err = Error;

    /// `2`, `4`, `6`, or a list of helper names such as `f1,f3` / `f1+f3`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "2" => Ok(HelperMode::Two),
            "4" => Ok(HelperMode::Four),
            "6" => Ok(HelperMode::Six),
            list => {
                let helpers = list
                    .split([',', '+'])
                    .map(str::parse)
                    .collect::<Result<Vec<Helper>>>()
                    .map_err(|_| Error::InvalidHelperMode(s.to_string()))?;
                HelperSet::new(helpers.clone())?;
                Ok(HelperMode::Custom(helpers))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub problems: Vec<String>,
    pub helper_mode: HelperMode,
    pub runs: usize,
    pub master_seed: u64,
    /// Engine settings. The active helpers are replaced by `helper_mode`;
    /// penalty coefficients and the equality tolerance are taken from here.
    pub engine: SmodeConfig,
    /// Worker threads; `None` uses all cores.
    pub workers: Option<usize>,
    pub output: Option<PathBuf>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            problems: problems::problem_ids().iter().map(|s| s.to_string()).collect(),
            helper_mode: HelperMode::Four,
            runs: 25,
            master_seed: 0,
            engine: SmodeConfig::default(),
            workers: None,
            output: None,
        }
    }
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T> {
    value
        .trim()
        .parse()
        .map_err(|_| Error::InvalidConfig(format!("invalid value `{value}` for `{key}`")))
}

fn parse_switch(key: &str, value: &str) -> Result<bool> {
    match value.trim().to_ascii_lowercase().as_str() {
        "on" | "true" | "yes" | "1" => Ok(true),
        "off" | "false" | "no" | "0" => Ok(false),
        _ => Err(Error::InvalidConfig(format!("`{key}` expects on|off, got `{value}`"))),
    }
}

impl ExperimentConfig {
    /// Sets one option by its command-line name (without the leading `--`).
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let e = &mut self.engine;
        match key.trim() {
            "problems" => self.problems = parse_problem_list(value)?,
            "helpers" => self.helper_mode = value.parse()?,
            "runs" => self.runs = parse(key, value)?,
            "seed" => self.master_seed = parse(key, value)?,
            "fes" => e.fes_max = parse(key, value)?,
            "mu" => e.mu = parse(key, value)?,
            "lambda" => e.lambda = parse(key, value)?,
            "F" => e.scale = parse(key, value)?,
            "Cr" => e.crossover_rate = parse(key, value)?,
            "delta" => e.helpers = e.helpers.clone().with_delta(parse(key, value)?)?,
            "c4" => e.helpers.c4 = parse(key, value)?,
            "c5" => e.helpers.c5 = parse(key, value)?,
            "c6" => e.helpers.c6 = parse(key, value)?,
            "archive" => e.archive.enabled = parse_switch(key, value)?,
            "archive-interval" => e.archive.interval = parse(key, value)?,
            "archive-count" => e.archive.replacements = parse(key, value)?,
            "max-retries" => e.max_bound_retries = parse(key, value)?,
            "mode" => {
                e.selection = match value.trim() {
                    "smode" | "dominance" => Selection::Dominance,
                    "greedy" => Selection::Greedy,
                    _ => {
                        return Err(Error::InvalidConfig(format!(
                            "`mode` expects smode|greedy, got `{value}`"
                        )))
                    }
                }
            }
            "workers" => self.workers = Some(parse(key, value)?),
            "out" => self.output = Some(PathBuf::from(value.trim())),
            other => return Err(Error::InvalidConfig(format!("unknown option `{other}`"))),
        }
        Ok(())
    }

    /// Applies `key = value` lines; blank lines and `#` comments are skipped.
    pub fn apply_config_text(&mut self, text: &str) -> Result<()> {
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or_default().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                Error::InvalidConfig(format!("line {}: expected key=value, got `{line}`", n + 1))
            })?;
            self.set(key.trim(), value.trim())?;
        }
        Ok(())
    }

    pub fn apply_config_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        self.apply_config_text(&text)
    }

    /// The engine configuration with the helper mode applied, validated.
    pub fn engine_config(&self) -> Result<SmodeConfig> {
        let h = &self.engine.helpers;
        let helpers = HelperSet::new(self.helper_mode.helpers())?
            .with_coefficients(h.c4, h.c5, h.c6)?
            .with_delta(h.delta)?;
        let config = SmodeConfig {
            helpers,
            ..self.engine.clone()
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::InvalidConfig("runs must be at least 1".into()));
        }
        if self.workers == Some(0) {
            return Err(Error::InvalidConfig("workers must be at least 1".into()));
        }
        for id in &self.problems {
            problems::problem(id)?;
        }
        self.engine_config().map(|_| ())
    }
}

/// Raw results of every run of one problem, in run order.
#[derive(Debug, Clone)]
pub struct ProblemRuns {
    pub problem: String,
    pub best_known: f64,
    pub runs: Vec<RunResult>,
}

impl ProblemRuns {
    /// `f(best feasible) - f*` per run, `None` when a run found nothing feasible.
    pub fn errors(&self) -> Vec<Option<f64>> {
        self.runs
            .iter()
            .map(|r| r.best_feasible.as_ref().map(|b| b.f - self.best_known))
            .collect()
    }
}

/// Runs the whole problem-by-run matrix. Run `k` of problem `p` is seeded
/// with `derive_seed(master_seed, p, k)` regardless of scheduling.
pub fn run_matrix(config: &ExperimentConfig) -> Result<Vec<ProblemRuns>> {
    config.validate()?;
    let engine = config.engine_config()?;
    let catalog = config
        .problems
        .iter()
        .map(|id| problems::problem(id).map(|(p, _)| p))
        .collect::<Result<Vec<_>>>()?;
    let tasks: Vec<(usize, u64)> = (0..catalog.len())
        .flat_map(|p| (0..config.runs as u64).map(move |r| (p, r)))
        .collect();

    let execute = || {
        tasks
            .par_iter()
            .map(|&(p, r)| {
                let problem = &catalog[p];
                engine::run(problem, &engine, derive_seed(config.master_seed, problem.id(), r))
            })
            .collect::<Result<Vec<RunResult>>>()
    };
    let results = match config.workers {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::InvalidConfig(format!("cannot start {n} workers: {e}")))?
            .install(execute)?,
        None => execute()?,
    };

    let mut results = results.into_iter();
    Ok(catalog
        .iter()
        .map(|problem| ProblemRuns {
            problem: problem.id().to_string(),
            best_known: problem.best_known().expect("catalog problems have f*"),
            runs: results.by_ref().take(config.runs).collect(),
        })
        .collect())
}

/// Runs the experiment and aggregates one [`RunStatistics`] per problem.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<RunStatistics>> {
    let label = config.helper_mode.to_string();
    Ok(run_matrix(config)?
        .iter()
        .map(|pr| RunStatistics::from_errors(&pr.problem, &label, config.engine.fes_max, &pr.errors()))
        .collect())
}
