//! DE/rand/1 mutation with resampling repair, and binomial crossover.

use crate::domain::{Bounds, DecisionVector, EvaluatedIndividual};
use crate::error::{Error, Result};
use crate::rng::RngStream;

/// `base + scale * (plus - minus)`.
pub fn mutant(base: &[f64], plus: &[f64], minus: &[f64], scale: f64) -> Vec<f64> {
    base.iter()
        .zip(plus.iter().zip(minus))
        .map(|(b, (p, m))| b + scale * (p - m))
        .collect()
}

/// Mutant for the member at `target`, built from three other distinct
/// members chosen uniformly from the whole population.
///
/// Out-of-box mutants are discarded and all three indices redrawn, up to
/// `max_retries` times; after that the last mutant is clamped into the box.
pub fn de_mutate(
    population: &[EvaluatedIndividual],
    target: usize,
    scale: f64,
    bounds: &Bounds,
    rng: &mut RngStream,
    max_retries: usize,
) -> Result<DecisionVector> {
    let size = population.len();
    if size < 4 {
        return Err(Error::PopulationTooSmall { size });
    }
    debug_assert!(target < size);
    let mut attempt = 0;
    loop {
        let r = rng.sample_distinct_excluding(size, 3, target);
        let mut v = mutant(
            &population[r[0]].x,
            &population[r[1]].x,
            &population[r[2]].x,
            scale,
        );
        if bounds.contains(&v) {
            return Ok(DecisionVector(v));
        }
        if attempt >= max_retries {
            log::debug!("mutation left the box after {max_retries} redraws; clamping");
            bounds.clamp(&mut v);
            return Ok(DecisionVector(v));
        }
        attempt += 1;
    }
}

/// Binomial crossover with the draws supplied: coordinate `j` comes from the
/// mutant when `draws[j] <= cr` or `j == forced`.
pub fn crossover_with(
    target: &[f64],
    mutant: &[f64],
    cr: f64,
    forced: usize,
    draws: &[f64],
) -> DecisionVector {
    debug_assert_eq!(target.len(), mutant.len());
    debug_assert_eq!(target.len(), draws.len());
    DecisionVector(
        (0..target.len())
            .map(|j| {
                if draws[j] <= cr || j == forced {
                    mutant[j]
                } else {
                    target[j]
                }
            })
            .collect(),
    )
}

/// Binomial crossover; at least one coordinate always comes from the mutant.
pub fn de_crossover(
    target: &[f64],
    mutant: &[f64],
    cr: f64,
    rng: &mut RngStream,
) -> DecisionVector {
    let forced = rng.index(target.len());
    let draws: Vec<f64> = (0..target.len()).map(|_| rng.uniform()).collect();
    crossover_with(target, mutant, cr, forced, &draws)
}
