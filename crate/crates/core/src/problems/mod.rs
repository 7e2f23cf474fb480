//! The constrained problem abstraction and the g01-g13 benchmark catalog.
//!
//! A problem minimizes `f(x)` over a box subject to inequality constraints
//! `g_i(x) <= 0` and equality constraints `h_j(x) = 0`. Evaluators are plain
//! callables, so library users can register their own problems next to the
//! built-in ones.

mod cec2006;

use std::fmt;
use std::sync::Arc;

use crate::domain::Bounds;
use crate::error::{Error, Result};

pub use cec2006::{problem, problem_catalog, problem_ids};

/// Scalar map over a decision vector.
pub type Evaluator = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

#[derive(Clone)]
struct Inequality {
    eval: Evaluator,
    /// Number of underlying constraints folded into this evaluator. Larger
    /// than one for disjunctive constraints encoded as a single `min`.
    encodes: usize,
}

/// Raw objective and constraint values at one point; no penalties applied.
#[derive(Debug, Clone, PartialEq)]
pub struct RawEvaluation {
    pub f: f64,
    pub g: Vec<f64>,
    pub h: Vec<f64>,
}

#[derive(Clone)]
pub struct ConstrainedProblem {
    id: String,
    bounds: Bounds,
    objective: Evaluator,
    inequalities: Vec<Inequality>,
    equalities: Vec<Evaluator>,
    best_known: Option<f64>,
    optimum: Option<Vec<f64>>,
}

impl fmt::Debug for ConstrainedProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConstrainedProblem")
            .field("id", &self.id)
            .field("dimension", &self.dimension())
            .field("inequalities", &self.inequalities.len())
            .field("equalities", &self.equalities.len())
            .field("best_known", &self.best_known)
            .finish()
    }
}

impl ConstrainedProblem {
    pub fn builder(
        id: impl Into<String>,
        bounds: Bounds,
        objective: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
    ) -> ProblemBuilder {
        ProblemBuilder {
            problem: ConstrainedProblem {
                id: id.into(),
                bounds,
                objective: Arc::new(objective),
                inequalities: Vec::new(),
                equalities: Vec::new(),
                best_known: None,
                optimum: None,
            },
        }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn dimension(&self) -> usize {
        self.bounds.dimension()
    }

    pub fn bounds(&self) -> &Bounds {
        &self.bounds
    }

    /// Reference optimum `f*` used to compute error values.
    pub fn best_known(&self) -> Option<f64> {
        self.best_known
    }

    /// A known optimal point, when one ships with the definition.
    pub fn optimum(&self) -> Option<&[f64]> {
        self.optimum.as_deref()
    }

    pub fn inequality_count(&self) -> usize {
        self.inequalities.len()
    }

    pub fn equality_count(&self) -> usize {
        self.equalities.len()
    }

    /// Constraints counted the way benchmark tables count them, i.e. with
    /// each disjunctive evaluator expanded to its number of disjuncts.
    pub fn declared_constraint_count(&self) -> usize {
        self.inequalities.iter().map(|c| c.encodes).sum::<usize>() + self.equalities.len()
    }

    /// Evaluates `f`, every `g_i` and every `h_j` at `x`.
    ///
    /// Each call is one fitness evaluation in the budget sense; callers that
    /// track a budget count it.
    pub fn evaluate_raw(&self, x: &[f64]) -> Result<RawEvaluation> {
        if x.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                actual: x.len(),
            });
        }
        let f = (self.objective)(x);
        let g: Vec<f64> = self.inequalities.iter().map(|c| (c.eval)(x)).collect();
        let h: Vec<f64> = self.equalities.iter().map(|e| e(x)).collect();
        let what = if !f.is_finite() {
            Some("objective")
        } else if g.iter().any(|v| !v.is_finite()) {
            Some("inequality")
        } else if h.iter().any(|v| !v.is_finite()) {
            Some("equality")
        } else {
            None
        };
        if let Some(what) = what {
            return Err(Error::NonFinite {
                problem: self.id.clone(),
                what,
                x: x.to_vec(),
            });
        }
        Ok(RawEvaluation { f, g, h })
    }
}

pub struct ProblemBuilder {
    problem: ConstrainedProblem,
}

impl ProblemBuilder {
    /// Adds `g(x) <= 0`.
    pub fn inequality(self, g: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Self {
        self.disjunctive_inequality(g, 1)
    }

    /// Adds one evaluator standing for `disjuncts` alternative constraints,
    /// satisfied when any of them is (typically a `min` over them).
    pub fn disjunctive_inequality(
        mut self,
        g: impl Fn(&[f64]) -> f64 + Send + Sync + 'static,
        disjuncts: usize,
    ) -> Self {
        self.problem.inequalities.push(Inequality {
            eval: Arc::new(g),
            encodes: disjuncts,
        });
        self
    }

    /// Adds `h(x) = 0`.
    pub fn equality(mut self, h: impl Fn(&[f64]) -> f64 + Send + Sync + 'static) -> Self {
        self.problem.equalities.push(Arc::new(h));
        self
    }

    pub fn best_known(mut self, value: f64) -> Self {
        self.problem.best_known = Some(value);
        self
    }

    pub fn optimum(mut self, x: Vec<f64>) -> Self {
        self.problem.optimum = Some(x);
        self
    }

    pub fn build(self) -> Result<ConstrainedProblem> {
        let p = self.problem;
        if let Some(x) = &p.optimum {
            if x.len() != p.dimension() {
                return Err(Error::DimensionMismatch {
                    expected: p.dimension(),
                    actual: x.len(),
                });
            }
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ObjectiveType {
    Linear,
    Quadratic,
    Nonlinear,
}

/// Summary row describing a benchmark problem.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemMeta {
    pub dimension: usize,
    pub objective_type: ObjectiveType,
    /// Estimated feasible share of the search box, in percent.
    pub rho: f64,
    /// Linear inequalities.
    pub li: usize,
    /// Nonlinear equalities.
    pub ne: usize,
    /// Nonlinear inequalities.
    pub ni: usize,
    /// Constraints active at the optimum.
    pub active: usize,
}

impl ProblemMeta {
    pub fn constraint_count(&self) -> usize {
        self.li + self.ne + self.ni
    }
}

/// Parses a problem selection: `all`, a range `g01..g13`, a comma list
/// `g02,g06,g12`, or any comma-separated mix of these.
pub fn parse_problem_list(spec: &str) -> Result<Vec<String>> {
    let known = problem_ids();
    let position = |id: &str| {
        known
            .iter()
            .position(|k| *k == id)
            .ok_or_else(|| Error::UnknownProblem(id.to_string()))
    };
    let mut out: Vec<String> = Vec::new();
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if item.eq_ignore_ascii_case("all") {
            out.extend(known.iter().map(|s| s.to_string()));
        } else if let Some((a, b)) = item.split_once("..") {
            let (lo, hi) = (position(a.trim())?, position(b.trim())?);
            if lo > hi {
                return Err(Error::InvalidConfig(format!("empty problem range `{item}`")));
            }
            out.extend(known[lo..=hi].iter().map(|s| s.to_string()));
        } else {
            position(item)?;
            out.push(item.to_string());
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|id| seen.insert(id.clone()));
    Ok(out)
}
