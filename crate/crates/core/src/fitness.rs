//! Constraint violation, the six fitness functions and the comparison
//! relations built on them.
//!
//! | helper | value                                   |
//! |--------|-----------------------------------------|
//! | `F1`   | `f`                                     |
//! | `F2`   | `v`                                     |
//! | `F3`   | `f` if feasible, else `f_worst + v`     |
//! | `F4`   | `f + c4 * v`                            |
//! | `F5`   | `f + c5 * v`                            |
//! | `F6`   | `f + c6 * v`                            |
//!
//! `f_worst` is the largest objective among the feasible members of the
//! population the individual is being compared in, or `0` if there are none.
//! F3 therefore ranks individuals exactly like the feasible rule and its
//! feasible minimizer is the constrained optimum; the other five only guide
//! the search.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::domain::EvaluatedIndividual;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Helper {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
}

impl Helper {
    pub const ALL: [Helper; 6] = [
        Helper::F1,
        Helper::F2,
        Helper::F3,
        Helper::F4,
        Helper::F5,
        Helper::F6,
    ];
}

impl fmt::Display for Helper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = match self {
            Helper::F1 => 1,
            Helper::F2 => 2,
            Helper::F3 => 3,
            Helper::F4 => 4,
            Helper::F5 => 5,
            Helper::F6 => 6,
        };
        write!(f, "f{n}")
    }
}

impl FromStr for Helper {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "f1" => Ok(Helper::F1),
            "f2" => Ok(Helper::F2),
            "f3" => Ok(Helper::F3),
            "f4" => Ok(Helper::F4),
            "f5" => Ok(Helper::F5),
            "f6" => Ok(Helper::F6),
            _ => Err(Error::InvalidHelperMode(s.to_string())),
        }
    }
}

/// Which fitness functions are active, in which order, and the penalty
/// coefficients and equality tolerance they use.
#[derive(Debug, Clone, PartialEq)]
pub struct HelperSet {
    active: Vec<Helper>,
    pub c4: f64,
    pub c5: f64,
    pub c6: f64,
    pub delta: f64,
}

impl HelperSet {
    pub const DEFAULT_C4: f64 = 1.0;
    pub const DEFAULT_C5: f64 = 10.0;
    pub const DEFAULT_C6: f64 = 100.0;
    pub const DEFAULT_DELTA: f64 = 1e-4;

    /// Helper set with the default coefficients `(1, 10, 100)` and
    /// `delta = 1e-4`.
    pub fn new(active: Vec<Helper>) -> Result<Self> {
        if active.is_empty() {
            return Err(Error::InvalidHelperMode("empty helper set".into()));
        }
        let mut seen = [false; 6];
        for h in &active {
            let slot = &mut seen[*h as usize];
            if *slot {
                return Err(Error::InvalidHelperMode(format!("duplicate helper {h}")));
            }
            *slot = true;
        }
        Ok(Self {
            active,
            c4: Self::DEFAULT_C4,
            c5: Self::DEFAULT_C5,
            c6: Self::DEFAULT_C6,
            delta: Self::DEFAULT_DELTA,
        })
    }

    /// `{f1, f2}`, `{f1..f4}` or `{f1..f6}`.
    pub fn first(count: usize) -> Result<Self> {
        match count {
            2 | 4 | 6 => Self::new(Helper::ALL[..count].to_vec()),
            _ => Err(Error::InvalidHelperMode(count.to_string())),
        }
    }

    pub fn with_coefficients(mut self, c4: f64, c5: f64, c6: f64) -> Result<Self> {
        if [c4, c5, c6].iter().any(|c| !(c.is_finite() && *c >= 0.0)) {
            return Err(Error::InvalidConfig(format!(
                "penalty coefficients must be finite and non-negative, got ({c4}, {c5}, {c6})"
            )));
        }
        self.c4 = c4;
        self.c5 = c5;
        self.c6 = c6;
        Ok(self)
    }

    pub fn with_delta(mut self, delta: f64) -> Result<Self> {
        if !(delta.is_finite() && delta >= 0.0) {
            return Err(Error::InvalidConfig(format!(
                "equality tolerance must be finite and non-negative, got {delta}"
            )));
        }
        self.delta = delta;
        Ok(self)
    }

    pub fn active(&self) -> &[Helper] {
        &self.active
    }

    /// Number of objectives `m`.
    pub fn len(&self) -> usize {
        self.active.len()
    }

    pub fn is_empty(&self) -> bool {
        self.active.is_empty()
    }

    pub fn needs_reference(&self) -> bool {
        self.active.contains(&Helper::F3)
    }

    /// `f1+f2+f3` style label.
    pub fn label(&self) -> String {
        self.active
            .iter()
            .map(Helper::to_string)
            .collect::<Vec<_>>()
            .join("+")
    }
}

/// Values of the active fitness functions, in [`HelperSet`] order.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ObjectiveVector(pub Vec<f64>);

impl ObjectiveVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Pareto dominance for minimization: no worse everywhere and strictly
    /// better somewhere.
    ///
    /// # Panics
    ///
    /// If the vectors have different lengths.
    pub fn dominates(&self, other: &ObjectiveVector) -> bool {
        dominates(&self.0, &other.0)
    }
}

/// See [`ObjectiveVector::dominates`].
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    assert_eq!(a.len(), b.len(), "objective vectors differ in length");
    let mut strictly_better = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly_better = true;
        }
    }
    strictly_better
}

/// Total violation `sum max(0, g_i) + sum max(0, |h_j| - delta)`.
pub fn violation(g: &[f64], h: &[f64], delta: f64) -> f64 {
    let ineq: f64 = g.iter().map(|v| v.max(0.0)).sum();
    let eq: f64 = h.iter().map(|v| (v.abs() - delta).max(0.0)).sum();
    ineq + eq
}

/// Largest `f` among feasible members, or `0` when none is feasible.
pub fn worst_feasible_reference<'a, I>(population: I) -> f64
where
    I: IntoIterator<Item = &'a EvaluatedIndividual>,
{
    population
        .into_iter()
        .filter(|ind| ind.is_feasible())
        .map(|ind| ind.f)
        .fold(None, |acc: Option<f64>, f| Some(acc.map_or(f, |a| a.max(f))))
        .unwrap_or(0.0)
}

/// Objective vector of an individual with objective `f` and violation `v`,
/// where `reference` is the population's worst feasible objective.
pub fn objective_vector(f: f64, v: f64, reference: f64, helpers: &HelperSet) -> ObjectiveVector {
    ObjectiveVector(
        helpers
            .active
            .iter()
            .map(|h| match h {
                Helper::F1 => f,
                Helper::F2 => v,
                Helper::F3 => {
                    if v == 0.0 {
                        f
                    } else {
                        reference + v
                    }
                }
                Helper::F4 => f + helpers.c4 * v,
                Helper::F5 => f + helpers.c5 * v,
                Helper::F6 => f + helpers.c6 * v,
            })
            .collect(),
    )
}

/// Feasible-rule ordering: feasible before infeasible, then by `f` among
/// feasible and by `v` among infeasible individuals.
pub fn feasible_rule_cmp(a: &EvaluatedIndividual, b: &EvaluatedIndividual) -> Ordering {
    match (a.is_feasible(), b.is_feasible()) {
        (true, true) => a.f.total_cmp(&b.f),
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => a.v.total_cmp(&b.v),
    }
}

/// Whether `a` is strictly preferred to `b` under the feasible rule.
pub fn feasible_rule_less(a: &EvaluatedIndividual, b: &EvaluatedIndividual) -> bool {
    feasible_rule_cmp(a, b) == Ordering::Less
}

/// Indices of the members not dominated by any other member.
pub fn nondominated_indices(vectors: &[&ObjectiveVector]) -> Vec<usize> {
    (0..vectors.len())
        .filter(|&i| {
            !vectors
                .iter()
                .enumerate()
                .any(|(j, other)| j != i && other.dominates(vectors[i]))
        })
        .collect()
}
