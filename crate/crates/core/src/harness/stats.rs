use std::cmp::Ordering;

/// Error-value statistics of one problem over independent runs.
///
/// A run without any feasible solution has no error value ("NA"). NA ranks
/// below every number, so `best`/`median`/`worst` are order statistics over
/// the runs sorted with NA last. `mean` and `std` are only defined when every
/// run produced a number.
#[derive(Debug, Clone, PartialEq)]
pub struct RunStatistics {
    pub problem: String,
    pub helpers: String,
    pub fes: usize,
    pub runs: usize,
    pub best: Option<f64>,
    pub median: Option<f64>,
    pub worst: Option<f64>,
    pub mean: Option<f64>,
    pub std: Option<f64>,
    pub feasible_runs: usize,
}

/// Orders error values with NA after every number.
pub fn na_last(a: &Option<f64>, b: &Option<f64>) -> Ordering {
    match (a, b) {
        (Some(x), Some(y)) => x.total_cmp(y),
        (Some(_), None) => Ordering::Less,
        (None, Some(_)) => Ordering::Greater,
        (None, None) => Ordering::Equal,
    }
}

impl RunStatistics {
    /// Aggregates per-run error values (`None` for runs with no feasible
    /// solution). The median is the lower middle order statistic, i.e. the
    /// 13th of 25, without interpolation.
    pub fn from_errors(
        problem: impl Into<String>,
        helpers: impl Into<String>,
        fes: usize,
        errors: &[Option<f64>],
    ) -> Self {
        let runs = errors.len();
        let mut sorted = errors.to_vec();
        sorted.sort_by(na_last);
        let feasible: Vec<f64> = sorted.iter().flatten().copied().collect();
        let (mean, std) = if runs > 0 && feasible.len() == runs {
            let n = runs as f64;
            let mean = feasible.iter().sum::<f64>() / n;
            let std = if runs > 1 {
                (feasible.iter().map(|e| (e - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt()
            } else {
                0.0
            };
            (Some(mean), Some(std))
        } else {
            (None, None)
        };
        let at = |i: usize| sorted.get(i).copied().flatten();
        Self {
            problem: problem.into(),
            helpers: helpers.into(),
            fes,
            runs,
            best: at(0),
            median: if runs == 0 { None } else { at((runs - 1) / 2) },
            worst: if runs == 0 { None } else { at(runs - 1) },
            mean,
            std,
            feasible_runs: feasible.len(),
        }
    }

    pub fn any_feasible(&self) -> bool {
        self.feasible_runs > 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_feasible() {
        let s = RunStatistics::from_errors("g08", "4", 5000, &[Some(3.0), Some(1.0), Some(2.0)]);
        assert_eq!((s.best, s.median, s.worst), (Some(1.0), Some(2.0), Some(3.0)));
        assert_eq!(s.mean, Some(2.0));
        assert_eq!(s.std, Some(1.0));
        assert_eq!(s.feasible_runs, 3);
    }

    #[test]
    fn partially_feasible() {
        let s = RunStatistics::from_errors("g06", "2", 5000, &[None, Some(5.0), Some(4.0)]);
        assert_eq!((s.best, s.median, s.worst), (Some(4.0), Some(5.0), None));
        assert_eq!((s.mean, s.std), (None, None));
        assert_eq!(s.feasible_runs, 2);
    }

    #[test]
    fn never_feasible() {
        let s = RunStatistics::from_errors("g01", "2", 5000, &[None; 25]);
        assert_eq!(
            [s.best, s.median, s.worst, s.mean, s.std],
            [None, None, None, None, None]
        );
        assert!(!s.any_feasible());
    }

    #[test]
    fn median_is_thirteenth_of_twenty_five() {
        let errors: Vec<Option<f64>> = (0..25).rev().map(|i| Some(i as f64)).collect();
        let s = RunStatistics::from_errors("g", "4", 1, &errors);
        assert_eq!(s.median, Some(12.0));
        // 12 numeric runs: the 13th order statistic is already NA
        let mut mixed: Vec<Option<f64>> = (0..12).map(|i| Some(i as f64)).collect();
        mixed.extend([None; 13]);
        let s = RunStatistics::from_errors("g", "4", 1, &mixed);
        assert_eq!((s.best, s.median), (Some(0.0), None));
    }

    #[test]
    fn single_run() {
        let s = RunStatistics::from_errors("g", "4", 1, &[Some(2.5)]);
        assert_eq!((s.mean, s.std), (Some(2.5), Some(0.0)));
    }
}
