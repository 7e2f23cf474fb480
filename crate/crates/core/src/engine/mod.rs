//! The differential evolution engines.
//!
//! [`Selection::Dominance`] is the multi-objective scheme: each generation a
//! random subset `Q` of `lambda` parents produces one DE child each, and
//! nondominated children replace parents of `Q` that they dominate under the
//! active [`HelperSet`]. [`Selection::Greedy`] is plain DE where every trial
//! competes with its own target under the feasible rule.
//!
//! An optional archive keeps the least-violating child of every generation
//! whose children are all infeasible and periodically injects archived
//! individuals back into the population.

mod variation;

pub use variation::{crossover_with, de_crossover, de_mutate, mutant};

use crate::domain::{DecisionVector, EvaluatedIndividual};
use crate::error::{Error, Result};
use crate::fitness::{
    self, feasible_rule_less, nondominated_indices, objective_vector, worst_feasible_reference,
    HelperSet, ObjectiveVector,
};
use crate::problems::ConstrainedProblem;
use crate::rng::RngStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Selection {
    /// Dominance-based replacement within the DE subset.
    #[default]
    Dominance,
    /// One-to-one greedy replacement under the feasible rule.
    Greedy,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ArchiveConfig {
    pub enabled: bool,
    /// Generations between injections.
    pub interval: usize,
    /// Upper bound on the number of parents replaced per injection.
    pub replacements: usize,
}

impl Default for ArchiveConfig {
    fn default() -> Self {
        Self {
            enabled: false,
            interval: 20,
            replacements: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SmodeConfig {
    /// Population size.
    pub mu: usize,
    /// Parents taking part in DE variation each generation.
    pub lambda: usize,
    /// Mutation scale factor.
    pub scale: f64,
    /// Crossover rate.
    pub crossover_rate: f64,
    /// Evaluation budget, initial population included.
    pub fes_max: usize,
    pub helpers: HelperSet,
    pub selection: Selection,
    pub archive: ArchiveConfig,
    /// Mutant redraws before falling back to clamping.
    pub max_bound_retries: usize,
}

impl Default for SmodeConfig {
    fn default() -> Self {
        Self {
            mu: 180,
            lambda: 8,
            scale: 0.6,
            crossover_rate: 0.95,
            fes_max: 5000,
            helpers: HelperSet::first(4).expect("four helpers is a valid mode"),
            selection: Selection::Dominance,
            archive: ArchiveConfig::default(),
            max_bound_retries: 100,
        }
    }
}

impl SmodeConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.mu < 4 {
            return bad(format!("mu = {} but DE mutation needs at least 4", self.mu));
        }
        if self.lambda < 1 || self.lambda > self.mu {
            return bad(format!("lambda = {} must lie in 1..={}", self.lambda, self.mu));
        }
        if !(self.scale > 0.0 && self.scale <= 2.0) {
            return bad(format!("F = {} must lie in (0, 2]", self.scale));
        }
        if !(0.0..=1.0).contains(&self.crossover_rate) {
            return bad(format!("Cr = {} must lie in [0, 1]", self.crossover_rate));
        }
        if self.fes_max < self.mu {
            return bad(format!(
                "fes budget {} is smaller than the population {}",
                self.fes_max, self.mu
            ));
        }
        if self.max_bound_retries == 0 {
            return bad("max_bound_retries must be positive".into());
        }
        if self.archive.enabled && self.archive.interval == 0 {
            return bad("archive interval must be positive".into());
        }
        Ok(())
    }
}

/// Evaluates `x` once and wraps it with its violation.
pub fn evaluate(
    problem: &ConstrainedProblem,
    x: DecisionVector,
    delta: f64,
) -> Result<EvaluatedIndividual> {
    let raw = problem.evaluate_raw(&x)?;
    let v = fitness::violation(&raw.g, &raw.h, delta);
    Ok(EvaluatedIndividual::new(x, raw.f, v))
}

fn offer_best(best: &mut Option<EvaluatedIndividual>, candidate: &EvaluatedIndividual) {
    if candidate.is_feasible() && best.as_ref().is_none_or(|b| candidate.f < b.f) {
        *best = Some(candidate.clone());
    }
}

/// What a single dominance generation did, for inspection and testing.
#[derive(Debug, Clone, Default)]
pub struct GenerationOutcome {
    /// Population indices that formed `Q`.
    pub subset: Vec<usize>,
    /// Children in the order they were produced (one per member of `Q`).
    pub children: Vec<EvaluatedIndividual>,
    /// `(slot, child index, displaced individual)` for every replacement.
    pub replacements: Vec<(usize, usize, EvaluatedIndividual)>,
    /// Whether the archive injected individuals this generation.
    pub archive_injected: bool,
}

#[derive(Debug, Clone)]
pub struct SmodeState {
    pub population: Vec<EvaluatedIndividual>,
    pub fes: usize,
    pub generation: usize,
    pub rng: RngStream,
    pub best_feasible: Option<EvaluatedIndividual>,
    pub archive: Vec<EvaluatedIndividual>,
}

impl SmodeState {
    /// `mu` uniform random individuals, evaluated; `fes = mu`.
    pub fn initialize(
        problem: &ConstrainedProblem,
        config: &SmodeConfig,
        seed: u64,
    ) -> Result<Self> {
        let mut rng = RngStream::new(seed);
        let population = (0..config.mu)
            .map(|_| {
                let x = problem.bounds().random_point(&mut rng);
                evaluate(problem, x, config.helpers.delta)
            })
            .collect::<Result<Vec<_>>>()?;
        let mut state = Self {
            population,
            fes: config.mu,
            generation: 0,
            rng,
            best_feasible: None,
            archive: Vec::new(),
        };
        for ind in &state.population {
            offer_best(&mut state.best_feasible, ind);
        }
        state.refresh_objectives(&[], &config.helpers);
        Ok(state)
    }

    pub fn best_feasible_f(&self) -> Option<f64> {
        self.best_feasible.as_ref().map(|b| b.f)
    }

    /// Recomputes every objective vector of the population and `extra`
    /// against the worst feasible objective of their union.
    fn refresh_objectives(&mut self, extra: &[EvaluatedIndividual], helpers: &HelperSet) -> f64 {
        let reference = worst_feasible_reference(self.population.iter().chain(extra));
        for ind in &mut self.population {
            ind.objectives = objective_vector(ind.f, ind.v, reference, helpers);
        }
        reference
    }

    /// One generation of the dominance scheme, plus the archive step.
    pub fn smode_generation(
        &mut self,
        config: &SmodeConfig,
        problem: &ConstrainedProblem,
    ) -> Result<GenerationOutcome> {
        let mu = self.population.len();
        let subset = self.rng.sample_distinct(mu, config.lambda);

        let mut children = Vec::with_capacity(subset.len());
        for &i in &subset {
            let v = de_mutate(
                &self.population,
                i,
                config.scale,
                problem.bounds(),
                &mut self.rng,
                config.max_bound_retries,
            )?;
            let trial = de_crossover(
                &self.population[i].x,
                &v,
                config.crossover_rate,
                &mut self.rng,
            );
            children.push(evaluate(problem, trial, config.helpers.delta)?);
        }
        self.fes += children.len();

        let reference = self.refresh_objectives(&children, &config.helpers);
        for c in &mut children {
            c.objectives = objective_vector(c.f, c.v, reference, &config.helpers);
        }

        let child_objectives: Vec<&ObjectiveVector> =
            children.iter().map(|c| &c.objectives).collect();
        let mut front = nondominated_indices(&child_objectives);
        self.rng.shuffle(&mut front);

        let mut replacements = Vec::new();
        for ci in front {
            let child = &children[ci];
            let dominated: Vec<usize> = subset
                .iter()
                .copied()
                .filter(|&slot| child.objectives.dominates(&self.population[slot].objectives))
                .collect();
            if dominated.is_empty() {
                continue;
            }
            let slot = dominated[self.rng.index(dominated.len())];
            let displaced = std::mem::replace(&mut self.population[slot], child.clone());
            replacements.push((slot, ci, displaced));
        }

        for c in &children {
            offer_best(&mut self.best_feasible, c);
        }
        self.generation += 1;
        let archive_injected = self.archive_step(&children, config);

        Ok(GenerationOutcome {
            subset,
            children,
            replacements,
            archive_injected,
        })
    }

    /// Archives the least-violating child when every child is infeasible and,
    /// every `interval` generations, moves randomly chosen archive members
    /// into randomly chosen population slots. Returns whether an injection
    /// happened.
    pub fn archive_step(
        &mut self,
        children: &[EvaluatedIndividual],
        config: &SmodeConfig,
    ) -> bool {
        let archive = &config.archive;
        if !archive.enabled {
            return false;
        }
        if !children.is_empty() && children.iter().all(|c| !c.is_feasible()) {
            let least = children
                .iter()
                .min_by(|a, b| a.v.total_cmp(&b.v))
                .expect("children is non-empty");
            self.archive.push(least.clone());
        }
        if !self.generation.is_multiple_of(archive.interval) || self.archive.is_empty() {
            return false;
        }
        let k = archive
            .replacements
            .min(self.archive.len())
            .min(self.population.len());
        let slots = self.rng.sample_distinct(self.population.len(), k);
        let picks = self.rng.sample_distinct(self.archive.len(), k);
        for (slot, pick) in slots.into_iter().zip(picks) {
            self.population[slot] = self.archive[pick].clone();
        }
        self.archive.clear();
        k > 0
    }

    /// One generation of greedy DE: every member produces a trial, and the
    /// trial takes its target's place unless the target is strictly better
    /// under the feasible rule. Stops early when the budget runs out.
    pub fn greedy_generation(
        &mut self,
        config: &SmodeConfig,
        problem: &ConstrainedProblem,
    ) -> Result<usize> {
        let mu = self.population.len();
        let remaining = config.fes_max.saturating_sub(self.fes).min(mu);
        let mut trials = Vec::with_capacity(remaining);
        for i in 0..remaining {
            let v = de_mutate(
                &self.population,
                i,
                config.scale,
                problem.bounds(),
                &mut self.rng,
                config.max_bound_retries,
            )?;
            let trial = de_crossover(
                &self.population[i].x,
                &v,
                config.crossover_rate,
                &mut self.rng,
            );
            trials.push(evaluate(problem, trial, config.helpers.delta)?);
        }
        self.fes += trials.len();
        for (i, trial) in trials.into_iter().enumerate() {
            offer_best(&mut self.best_feasible, &trial);
            if !feasible_rule_less(&self.population[i], &trial) {
                self.population[i] = trial;
            }
        }
        self.generation += 1;
        Ok(remaining)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunResult {
    pub seed: u64,
    pub best_feasible: Option<EvaluatedIndividual>,
    pub fes: usize,
    pub generations: usize,
    /// Best feasible objective so far: entry 0 after initialization, then
    /// one entry per generation.
    pub trace: Vec<Option<f64>>,
}

/// Runs one optimization from `seed` until the next generation would exceed
/// the evaluation budget.
pub fn run(problem: &ConstrainedProblem, config: &SmodeConfig, seed: u64) -> Result<RunResult> {
    config.validate()?;
    let mut state = SmodeState::initialize(problem, config, seed)?;
    let mut trace = vec![state.best_feasible_f()];
    match config.selection {
        Selection::Dominance => {
            while state.fes + config.lambda <= config.fes_max {
                state.smode_generation(config, problem)?;
                trace.push(state.best_feasible_f());
            }
        }
        Selection::Greedy => {
            while state.fes < config.fes_max {
                state.greedy_generation(config, problem)?;
                trace.push(state.best_feasible_f());
            }
        }
    }
    Ok(RunResult {
        seed,
        best_feasible: state.best_feasible,
        fes: state.fes,
        generations: state.generation,
        trace,
    })
}
