//! Test-only oracles and deterministic property checks.
//!
//! Nothing here goes through the engine or fitness code paths it is used to
//! check: feasibility is decided from raw constraint values, and the optimum
//! oracle is an exhaustive grid search with window refinement.

#![allow(dead_code)]

use smode::engine::{run, SmodeState};
use smode::fitness::{
    dominates, feasible_rule_cmp, objective_vector, violation, worst_feasible_reference, Helper,
    HelperSet,
};
use smode::problems::{problem_catalog, ConstrainedProblem, RawEvaluation};
use smode::{DecisionVector, EvaluatedIndividual, RngStream, SmodeConfig};

pub const DELTA: f64 = 1e-4;

/// Feasibility straight from the definitions: every `g <= 0`, every
/// `|h| <= delta`.
pub fn directly_feasible(raw: &RawEvaluation, delta: f64) -> bool {
    raw.g.iter().all(|g| *g <= 0.0) && raw.h.iter().all(|h| h.abs() <= delta)
}

/// Best feasible point found by a full grid over the box followed by
/// repeated finer grids over a window around the incumbent. Each refinement
/// halves the spacing, which keeps grid points inside thin feasible wedges.
pub fn grid_oracle(
    problem: &ConstrainedProblem,
    initial_points: usize,
    refine_points: usize,
    levels: usize,
) -> Option<(f64, Vec<f64>)> {
    let n = problem.dimension();
    let (full_lo, full_hi) = (problem.bounds().lower().to_vec(), problem.bounds().upper().to_vec());
    let mut lo = full_lo.clone();
    let mut hi = full_hi.clone();
    let mut best: Option<(f64, Vec<f64>)> = None;
    for level in 0..levels {
        let points = if level == 0 { initial_points } else { refine_points };
        let step: Vec<f64> = (0..n).map(|d| (hi[d] - lo[d]) / (points - 1) as f64).collect();
        let mut idx = vec![0usize; n];
        let mut x = vec![0.0; n];
        'grid: loop {
            for d in 0..n {
                x[d] = if idx[d] == points - 1 { hi[d] } else { lo[d] + step[d] * idx[d] as f64 };
            }
            if let Ok(raw) = problem.evaluate_raw(&x) {
                if directly_feasible(&raw, DELTA) && best.as_ref().is_none_or(|(f, _)| raw.f < *f) {
                    best = Some((raw.f, x.clone()));
                }
            }
            for d in 0..n {
                idx[d] += 1;
                if idx[d] < points {
                    continue 'grid;
                }
                idx[d] = 0;
            }
            break;
        }
        let (_, centre) = best.as_ref()?;
        for d in 0..n {
            let half = step[d] * (refine_points - 1) as f64 / 4.0;
            lo[d] = (centre[d] - half).max(full_lo[d]);
            hi[d] = (centre[d] + half).min(full_hi[d]);
        }
    }
    best
}

fn rand_vec(rng: &mut RngStream, len: usize, levels: usize) -> Vec<f64> {
    (0..len).map(|_| rng.index(levels) as f64).collect()
}

/// Irreflexivity, asymmetry and transitivity of Pareto dominance on `count`
/// random integer-valued vectors (coarse values make relations frequent).
pub fn check_dominance_laws(count: usize) -> Result<(), String> {
    let mut rng = RngStream::new(0xD0);
    let mut transitive_chains = 0;
    for _ in 0..count {
        let m = 1 + rng.index(6);
        let a = rand_vec(&mut rng, m, 3);
        let b = rand_vec(&mut rng, m, 3);
        let c = rand_vec(&mut rng, m, 3);
        if dominates(&a, &a) {
            return Err(format!("{a:?} dominates itself"));
        }
        if dominates(&a, &b) && dominates(&b, &a) {
            return Err(format!("{a:?} and {b:?} dominate each other"));
        }
        if dominates(&a, &b) && dominates(&b, &c) {
            transitive_chains += 1;
            if !dominates(&a, &c) {
                return Err(format!("transitivity fails on {a:?} {b:?} {c:?}"));
            }
        }
    }
    if transitive_chains == 0 {
        return Err("no dominance chains sampled".into());
    }
    Ok(())
}

/// `v == 0` exactly when the raw constraints are satisfied, and `v` equals
/// the violation sum recomputed here, on `count` random points per problem.
pub fn check_violation_vs_direct(count: usize) -> Result<(), String> {
    let mut rng = RngStream::new(0x71);
    for (p, _) in problem_catalog() {
        for _ in 0..count {
            let x = p.bounds().random_point(&mut rng);
            let raw = p.evaluate_raw(&x).map_err(|e| e.to_string())?;
            let v = violation(&raw.g, &raw.h, DELTA);
            let mut expected = 0.0;
            for g in &raw.g {
                if *g > 0.0 {
                    expected += g;
                }
            }
            for h in &raw.h {
                if h.abs() > DELTA {
                    expected += h.abs() - DELTA;
                }
            }
            if v < 0.0 || (v == 0.0) != directly_feasible(&raw, DELTA) {
                return Err(format!("{}: v = {v} disagrees with direct check at {x:?}", p.id()));
            }
            if (v - expected).abs() > 1e-9 * (1.0 + expected.abs()) {
                return Err(format!("{}: v = {v}, expected {expected}", p.id()));
            }
        }
    }
    Ok(())
}

fn random_population(rng: &mut RngStream, size: usize, feasible_share: f64) -> Vec<EvaluatedIndividual> {
    (0..size)
        .map(|_| {
            let f = 200.0 * rng.uniform() - 100.0;
            let v = if rng.uniform() < feasible_share { 0.0 } else { 10.0 * rng.uniform() + 1e-9 };
            EvaluatedIndividual::new(DecisionVector(vec![0.0]), f, v)
        })
        .collect()
}

/// On populations with at least one feasible member: the f3-minimizer over
/// feasible members is the f-minimizer, and every infeasible member has a
/// larger f3 than every feasible one.
pub fn check_f3_properties(populations: usize) -> Result<(), String> {
    let helpers = HelperSet::new(vec![Helper::F3]).unwrap();
    let mut rng = RngStream::new(0xF3);
    for _ in 0..populations {
        let size = 2 + rng.index(30);
        let mut pop = random_population(&mut rng, size, 0.4);
        pop[0].v = 0.0;
        let reference = worst_feasible_reference(&pop);
        let f3: Vec<f64> = pop
            .iter()
            .map(|i| objective_vector(i.f, i.v, reference, &helpers).0[0])
            .collect();
        let feasible: Vec<usize> = (0..size).filter(|&i| pop[i].v == 0.0).collect();
        let argmin = |key: &dyn Fn(usize) -> f64| {
            feasible
                .iter()
                .copied()
                .min_by(|&a, &b| key(a).total_cmp(&key(b)))
                .unwrap()
        };
        if pop[argmin(&|i| f3[i])].f != pop[argmin(&|i| pop[i].f)].f {
            return Err("f3 argmin differs from f argmin on the feasible set".into());
        }
        let max_feasible_f3 = feasible.iter().map(|&i| f3[i]).fold(f64::NEG_INFINITY, f64::max);
        for i in (0..size).filter(|&i| pop[i].v > 0.0) {
            if f3[i] <= max_feasible_f3 {
                return Err(format!("infeasible f3 {} not above feasible {}", f3[i], max_feasible_f3));
            }
        }
    }
    Ok(())
}

/// f4..f6 are non-decreasing in v, and f6 >= f5 >= f4 for v > 0.
pub fn check_penalty_monotonicity(samples: usize) -> Result<(), String> {
    let helpers = HelperSet::new(vec![Helper::F4, Helper::F5, Helper::F6]).unwrap();
    let mut rng = RngStream::new(0x46);
    for _ in 0..samples {
        let f = 2000.0 * rng.uniform() - 1000.0;
        let v1 = 50.0 * rng.uniform();
        let v2 = v1 + 50.0 * rng.uniform();
        let a = objective_vector(f, v1, 0.0, &helpers).0;
        let b = objective_vector(f, v2, 0.0, &helpers).0;
        if a.iter().zip(&b).any(|(x, y)| x > y) {
            return Err(format!("penalties decrease from v={v1} to v={v2}: {a:?} {b:?}"));
        }
        if v1 > 0.0 && !(a[2] >= a[1] && a[1] >= a[0]) {
            return Err(format!("coefficient order violated: {a:?}"));
        }
    }
    Ok(())
}

/// Runs dominance generations on every problem and checks the population
/// size, FES accounting, trial bounds, replacement soundness and the
/// monotone best-so-far trace.
pub fn check_engine_invariants(generations: usize) -> Result<(), String> {
    let config = SmodeConfig {
        mu: 40,
        lambda: 8,
        fes_max: 40 + 8 * generations,
        helpers: HelperSet::first(6).unwrap(),
        ..SmodeConfig::default()
    };
    for (p, _) in problem_catalog() {
        let mut state = SmodeState::initialize(&p, &config, 17).map_err(|e| e.to_string())?;
        let mut last_best = state.best_feasible_f();
        for g in 1..=generations {
            let out = state.smode_generation(&config, &p).map_err(|e| e.to_string())?;
            if state.population.len() != config.mu {
                return Err(format!("{}: population size {}", p.id(), state.population.len()));
            }
            if state.fes != config.mu + g * config.lambda {
                return Err(format!("{}: fes {} after {g} generations", p.id(), state.fes));
            }
            for c in &out.children {
                if !p.bounds().contains(&c.x) {
                    return Err(format!("{}: trial {:?} out of bounds", p.id(), c.x));
                }
            }
            for (slot, ci, displaced) in &out.replacements {
                if !dominates(&out.children[*ci].objectives.0, &displaced.objectives.0) {
                    return Err(format!("{}: child replaced a non-dominated parent", p.id()));
                }
                if !out.subset.contains(slot) {
                    return Err(format!("{}: replacement outside the DE subset", p.id()));
                }
            }
            let best = state.best_feasible_f();
            if let (Some(prev), Some(now)) = (last_best, best) {
                if now > prev {
                    return Err(format!("{}: best feasible rose from {prev} to {now}", p.id()));
                }
            }
            if last_best.is_some() && best.is_none() {
                return Err(format!("{}: best feasible lost", p.id()));
            }
            last_best = best;
        }
    }
    Ok(())
}

/// Two full default runs from the same seed agree bit for bit.
pub fn check_run_determinism() -> Result<(), String> {
    let (p, _) = smode::problems::problem("g06").unwrap();
    let config = SmodeConfig::default();
    let a = run(&p, &config, 123).map_err(|e| e.to_string())?;
    let b = run(&p, &config, 123).map_err(|e| e.to_string())?;
    let bits = |r: &smode::RunResult| {
        (
            r.best_feasible.as_ref().map(|b| (b.f.to_bits(), b.x.iter().map(|v| v.to_bits()).collect::<Vec<_>>())),
            r.trace.iter().map(|t| t.map(f64::to_bits)).collect::<Vec<_>>(),
            r.fes,
            r.generations,
        )
    };
    if bits(&a) != bits(&b) {
        return Err("same seed produced different runs".into());
    }
    Ok(())
}

/// The minimum under the feasible-rule order equals the lexicographic
/// minimum over (infeasible?, f if feasible else v).
pub fn check_feasible_rule_minimum(populations: usize) -> Result<(), String> {
    let mut rng = RngStream::new(0xFE);
    for _ in 0..populations {
        let size = 1 + rng.index(20);
        let pop = random_population(&mut rng, size, 0.3);
        let by_rule = pop.iter().min_by(|a, b| feasible_rule_cmp(a, b)).unwrap();
        let key = |i: &EvaluatedIndividual| if i.v == 0.0 { (0, i.f) } else { (1, i.v) };
        let by_key = pop
            .iter()
            .min_by(|a, b| key(a).0.cmp(&key(b).0).then(key(a).1.total_cmp(&key(b).1)))
            .unwrap();
        if key(by_rule) != key(by_key) {
            return Err(format!("{:?} vs {:?}", key(by_rule), key(by_key)));
        }
    }
    Ok(())
}
