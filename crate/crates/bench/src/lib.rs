//! Fixtures shared by the engine benchmarks.

use smode::engine::evaluate;
use smode::fitness::{objective_vector, HelperSet};
use smode::problems::problem;
use smode::{ConstrainedProblem, EvaluatedIndividual, ObjectiveVector, RngStream};

pub fn catalog_problem(id: &str) -> ConstrainedProblem {
    problem(id).expect("catalog problem").0
}

/// `size` random points of `problem`, evaluated, with objective vectors for
/// `helpers` computed against a zero reference.
pub fn evaluated_population(
    problem: &ConstrainedProblem,
    size: usize,
    helpers: &HelperSet,
    seed: u64,
) -> Vec<EvaluatedIndividual> {
    let mut rng = RngStream::new(seed);
    (0..size)
        .map(|_| {
            let mut ind = evaluate(problem, problem.bounds().random_point(&mut rng), helpers.delta)
                .expect("random points are in range");
            ind.objectives = objective_vector(ind.f, ind.v, 0.0, helpers);
            ind
        })
        .collect()
}

pub fn objective_vectors(population: &[EvaluatedIndividual]) -> Vec<&ObjectiveVector> {
    population.iter().map(|i| &i.objectives).collect()
}
