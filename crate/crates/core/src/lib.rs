//! Constrained optimization by multi-objective differential evolution with
//! helper functions.
//!
//! A constrained problem `min f(x)` subject to `g_i(x) <= 0`, `h_j(x) = 0` is
//! recast as the unconstrained minimization of up to six fitness functions:
//! the raw objective, the total violation, a feasible-rule function and three
//! penalty functions (see [`fitness`]). The [`engine`] evolves a population
//! with DE variation and Pareto-dominance replacement; the [`harness`] runs
//! the g01-g13 benchmark protocol and reports error statistics.
//!
//! ```
//! use smode::{engine, problems, SmodeConfig};
//!
//! let (g08, _) = problems::problem("g08").unwrap();
//! let result = engine::run(&g08, &SmodeConfig::default(), 7).unwrap();
//! assert_eq!(result.fes, 180 + result.generations * 8);
//! ```

pub mod domain;
pub mod engine;
pub mod error;
pub mod fitness;
pub mod harness;
pub mod problems;
pub mod rng;

pub use domain::{Bounds, DecisionVector, EvaluatedIndividual};
pub use engine::{run, RunResult, Selection, SmodeConfig, SmodeState};
pub use error::{Error, Result};
pub use fitness::{Helper, HelperSet, ObjectiveVector};
pub use harness::{ExperimentConfig, HelperMode, RunStatistics};
pub use problems::{ConstrainedProblem, ProblemMeta};
pub use rng::RngStream;
