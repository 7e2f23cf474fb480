use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use super::report::format_stat;
use super::stats::{na_last, RunStatistics};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    A,
    B,
    Tie,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub problem: String,
    pub feasible_a: usize,
    pub feasible_b: usize,
    pub best_a: Option<f64>,
    pub best_b: Option<f64>,
    pub verdict: Verdict,
}

/// Per-problem comparison of two result sets over the same problems.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub label_a: String,
    pub label_b: String,
    pub rows: Vec<ComparisonRow>,
    /// Problems on which configuration A found a feasible solution at least once.
    pub feasible_problems_a: usize,
    pub feasible_problems_b: usize,
}

impl Comparison {
    pub fn wins(&self, v: Verdict) -> usize {
        self.rows.iter().filter(|r| r.verdict == v).count()
    }
}

/// Compares two result sets problem by problem: more feasible runs wins, then
/// the lower best error (NA counts as worse than any number).
pub fn compare_report(a: &[RunStatistics], b: &[RunStatistics]) -> Result<Comparison> {
    let ids = |s: &[RunStatistics]| s.iter().map(|r| r.problem.clone()).collect::<BTreeSet<_>>();
    let (ids_a, ids_b) = (ids(a), ids(b));
    if ids_a != ids_b || ids_a.len() != a.len() || ids_b.len() != b.len() {
        let only_a: Vec<_> = ids_a.difference(&ids_b).cloned().collect();
        let only_b: Vec<_> = ids_b.difference(&ids_a).cloned().collect();
        return Err(Error::MismatchedProblems(format!(
            "only in A: {only_a:?}, only in B: {only_b:?} (duplicates are not allowed)"
        )));
    }
    let rows = a
        .iter()
        .map(|ra| {
            let rb = b
                .iter()
                .find(|rb| rb.problem == ra.problem)
                .expect("problem sets are equal");
            let verdict = match ra
                .feasible_runs
                .cmp(&rb.feasible_runs)
                .reverse()
                .then_with(|| na_last(&ra.best, &rb.best))
            {
                Ordering::Less => Verdict::A,
                Ordering::Greater => Verdict::B,
                Ordering::Equal => Verdict::Tie,
            };
            ComparisonRow {
                problem: ra.problem.clone(),
                feasible_a: ra.feasible_runs,
                feasible_b: rb.feasible_runs,
                best_a: ra.best,
                best_b: rb.best,
                verdict,
            }
        })
        .collect();
    let label = |s: &[RunStatistics]| {
        let labels: BTreeSet<_> = s.iter().map(|r| r.helpers.as_str()).collect();
        labels.into_iter().collect::<Vec<_>>().join("/")
    };
    Ok(Comparison {
        label_a: label(a),
        label_b: label(b),
        rows,
        feasible_problems_a: a.iter().filter(|r| r.any_feasible()).count(),
        feasible_problems_b: b.iter().filter(|r| r.any_feasible()).count(),
    })
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<8} {:>6} {:>6} {:>12} {:>12}  winner",
            "problem", "feas A", "feas B", "best A", "best B"
        )?;
        for r in &self.rows {
            let winner = match r.verdict {
                Verdict::A => "A",
                Verdict::B => "B",
                Verdict::Tie => "tie",
            };
            writeln!(
                f,
                "{:<8} {:>6} {:>6} {:>12} {:>12}  {winner}",
                r.problem,
                r.feasible_a,
                r.feasible_b,
                format_stat(r.best_a),
                format_stat(r.best_b),
            )?;
        }
        writeln!(
            f,
            "A = helpers {}: feasible on {} of {} problems, wins {}",
            self.label_a,
            self.feasible_problems_a,
            self.rows.len(),
            self.wins(Verdict::A)
        )?;
        write!(
            f,
            "B = helpers {}: feasible on {} of {} problems, wins {}; ties {}",
            self.label_b,
            self.feasible_problems_b,
            self.rows.len(),
            self.wins(Verdict::B),
            self.wins(Verdict::Tie)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn stats(problem: &str, helpers: &str, errors: &[Option<f64>]) -> RunStatistics {
        RunStatistics::from_errors(problem, helpers, 5000, errors)
    }

    #[test]
    fn identical_sets_tie_everywhere() {
        let a = vec![
            stats("g06", "4", &[Some(3.0), None]),
            stats("g01", "4", &[None, None]),
        ];
        let c = compare_report(&a, &a).unwrap();
        assert!(c.rows.iter().all(|r| r.verdict == Verdict::Tie));
        assert_eq!(c.feasible_problems_a, c.feasible_problems_b);
        assert_eq!(c.wins(Verdict::Tie), 2);
    }

    #[test]
    fn feasibility_then_best_error() {
        let a = vec![
            stats("g06", "2", &[Some(1.0), None]),
            stats("g08", "2", &[Some(1.0), Some(2.0)]),
            stats("g11", "2", &[None, None]),
        ];
        let b = vec![
            stats("g11", "4", &[Some(0.1), None]),
            stats("g06", "4", &[Some(5.0), Some(6.0)]),
            stats("g08", "4", &[Some(0.5), Some(9.0)]),
        ];
        let c = compare_report(&a, &b).unwrap();
        let verdicts: Vec<_> = c.rows.iter().map(|r| (r.problem.as_str(), r.verdict)).collect();
        assert_eq!(
            verdicts,
            vec![("g06", Verdict::B), ("g08", Verdict::B), ("g11", Verdict::B)]
        );
        assert_eq!((c.feasible_problems_a, c.feasible_problems_b), (2, 3));
        assert_eq!((c.label_a.as_str(), c.label_b.as_str()), ("2", "4"));
    }

    #[test]
    fn mismatched_sets() {
        let a = vec![stats("g06", "2", &[None])];
        let b = vec![stats("g08", "4", &[None])];
        assert!(matches!(compare_report(&a, &b), Err(Error::MismatchedProblems(_))));
        let dup = vec![stats("g06", "2", &[None]), stats("g06", "2", &[None])];
        assert!(compare_report(&dup, &a).is_err());
    }
}
