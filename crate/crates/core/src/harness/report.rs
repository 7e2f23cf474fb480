//! CSV emission and parsing of experiment results.
//!
//! Columns: `problem,helpers,fes,runs,best,median,worst,mean,std,feasible_runs`.
//! Statistics are written in scientific notation with four decimals and a
//! signed two-digit exponent (`1.1730E-03`); missing values are written as
//! `NA`.

use std::fs::File;
use std::io::Write;
use std::path::Path;

use super::stats::RunStatistics;
use crate::error::{Error, Result};

pub const HEADER: [&str; 10] = [
    "problem",
    "helpers",
    "fes",
    "runs",
    "best",
    "median",
    "worst",
    "mean",
    "std",
    "feasible_runs",
];

pub const NA: &str = "NA";

/// `1.1730E-03` style rendering.
pub fn format_sci(x: f64) -> String {
    let s = format!("{x:.4E}");
    let (mantissa, exp) = s.split_once('E').expect("E formatting always has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}E{sign}{:02}", exp.abs())
}

pub fn format_stat(x: Option<f64>) -> String {
    x.map_or_else(|| NA.to_string(), format_sci)
}

fn record(s: &RunStatistics) -> [String; 10] {
    [
        s.problem.clone(),
        s.helpers.clone(),
        s.fes.to_string(),
        s.runs.to_string(),
        format_stat(s.best),
        format_stat(s.median),
        format_stat(s.worst),
        format_stat(s.mean),
        format_stat(s.std),
        s.feasible_runs.to_string(),
    ]
}

pub fn write_csv_to<W: Write>(stats: &[RunStatistics], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for s in stats {
        w.write_record(record(s))?;
    }
    w.flush().map_err(|e| Error::io("<csv output>", e))?;
    Ok(())
}

pub fn write_csv(stats: &[RunStatistics], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_csv_to(stats, file)
}

pub fn read_csv(path: &Path) -> Result<Vec<RunStatistics>> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    let malformed = |reason: String| Error::MalformedResults {
        path: path.to_path_buf(),
        reason,
    };
    let mut reader = csv::Reader::from_reader(file);
    let header = reader.headers()?.clone();
    if header.iter().ne(HEADER.iter().copied()) {
        return Err(malformed(format!("unexpected header {header:?}")));
    }
    let mut out = Vec::new();
    for (line, rec) in reader.records().enumerate() {
        let rec = rec?;
        let field = |i: usize| rec.get(i).unwrap_or_default();
        let count = |i: usize| {
            field(i)
                .parse::<usize>()
                .map_err(|_| malformed(format!("row {}: bad {} `{}`", line + 1, HEADER[i], field(i))))
        };
        let stat = |i: usize| -> Result<Option<f64>> {
            match field(i) {
                NA => Ok(None),
                v => v.parse::<f64>().map(Some).map_err(|_| {
                    malformed(format!("row {}: bad {} `{v}`", line + 1, HEADER[i]))
                }),
            }
        };
        out.push(RunStatistics {
            problem: field(0).to_string(),
            helpers: field(1).to_string(),
            fes: count(2)?,
            runs: count(3)?,
            best: stat(4)?,
            median: stat(5)?,
            worst: stat(6)?,
            mean: stat(7)?,
            std: stat(8)?,
            feasible_runs: count(9)?,
        });
    }
    Ok(out)
}
