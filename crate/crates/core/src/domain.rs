//! Shared domain types: the search box, decision vectors and evaluated
//! individuals.

use std::ops::Deref;

use crate::error::{Error, Result};
use crate::fitness::ObjectiveVector;
use crate::rng::RngStream;

/// Inclusive box `lower[i] <= x[i] <= upper[i]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bounds {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl Bounds {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidBounds("dimension must be at least 1".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch {
                expected: lower.len(),
                actual: upper.len(),
            });
        }
        // written negated so that NaN bounds are rejected
        #[allow(clippy::neg_cmp_op_on_partial_ord)]
        if let Some(i) = (0..lower.len()).find(|&i| !(lower[i] <= upper[i])) {
            return Err(Error::InvalidBounds(format!(
                "lower[{i}] = {} exceeds upper[{i}] = {}",
                lower[i], upper[i]
            )));
        }
        Ok(Self { lower, upper })
    }

    /// Same interval on every coordinate.
    pub fn uniform(dimension: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dimension], vec![upper; dimension])
    }

    pub fn dimension(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn midpoint(&self) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(l, u)| 0.5 * (l + u))
            .collect()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        x.len() == self.dimension()
            && x.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(v, (l, u))| *l <= *v && *v <= *u)
    }

    /// Maps unit draws `u[i]` onto the box: `lower + (upper - lower) * u`.
    pub fn point_from_unit(&self, unit: &[f64]) -> DecisionVector {
        debug_assert_eq!(unit.len(), self.dimension());
        DecisionVector(
            unit.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .map(|(u, (l, h))| l + (h - l) * u)
                .collect(),
        )
    }

    /// Uniform random point in the box.
    pub fn random_point(&self, rng: &mut RngStream) -> DecisionVector {
        let unit: Vec<f64> = (0..self.dimension()).map(|_| rng.uniform()).collect();
        self.point_from_unit(&unit)
    }

    /// Whether `x` lies in the box, boundaries included.
    pub fn clip_check(&self, x: &[f64]) -> Result<bool> {
        if x.len() != self.dimension() {
            return Err(Error::DimensionMismatch {
                expected: self.dimension(),
                actual: x.len(),
            });
        }
        Ok(self.contains(x))
    }

    pub fn clamp(&self, x: &mut [f64]) {
        for (v, (l, u)) in x.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            *v = v.clamp(*l, *u);
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecisionVector(pub Vec<f64>);

impl DecisionVector {
    pub fn into_inner(self) -> Vec<f64> {
        self.0
    }
}

impl Deref for DecisionVector {
    type Target = [f64];

    fn deref(&self) -> &[f64] {
        &self.0
    }
}

impl From<Vec<f64>> for DecisionVector {
    fn from(values: Vec<f64>) -> Self {
        Self(values)
    }
}

/// A decision vector together with its cached raw objective `f`, total
/// constraint violation `v` and its current objective vector.
///
/// `objectives` depends on the population the individual is compared in
/// (through the feasible-rule function), so the engine refreshes it every
/// generation.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluatedIndividual {
    pub x: DecisionVector,
    pub f: f64,
    pub v: f64,
    pub objectives: ObjectiveVector,
}

impl EvaluatedIndividual {
    pub fn new(x: DecisionVector, f: f64, v: f64) -> Self {
        debug_assert!(v >= 0.0);
        Self {
            x,
            f,
            v,
            objectives: ObjectiveVector::default(),
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.v == 0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(lower: &[f64], upper: &[f64]) -> Bounds {
        Bounds::new(lower.to_vec(), upper.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_boxes() {
        assert!(Bounds::new(vec![], vec![]).is_err());
        assert!(Bounds::new(vec![0.0], vec![1.0, 2.0]).is_err());
        assert!(Bounds::new(vec![1.0], vec![0.0]).is_err());
        assert!(Bounds::new(vec![f64::NAN], vec![0.0]).is_err());
        assert!(Bounds::new(vec![1.0], vec![1.0]).is_ok());
    }

    #[test]
    fn degenerate_box_yields_its_only_point() {
        let bounds = b(&[0.0, 0.0], &[0.0, 0.0]);
        let mut rng = RngStream::new(5);
        for _ in 0..10 {
            assert_eq!(bounds.random_point(&mut rng).0, vec![0.0, 0.0]);
        }
    }

    #[test]
    fn unit_draws_map_affinely() {
        assert_eq!(b(&[-1.0], &[1.0]).point_from_unit(&[0.5]).0, vec![0.0]);
        assert_eq!(
            b(&[2.0, 3.0], &[4.0, 9.0]).point_from_unit(&[0.25, 0.5]).0,
            vec![2.5, 6.0]
        );
    }

    #[test]
    fn clip_check_is_inclusive() {
        let unit = b(&[0.0], &[1.0]);
        assert!(unit.clip_check(&[0.5]).unwrap());
        assert!(unit.clip_check(&[1.0]).unwrap());
        assert!(unit.clip_check(&[0.0]).unwrap());
        assert!(!unit.clip_check(&[1.0001]).unwrap());
        assert!(matches!(
            unit.clip_check(&[0.5, 0.5]),
            Err(Error::DimensionMismatch { expected: 1, actual: 2 })
        ));
    }

    #[test]
    fn random_point_mean_is_box_midpoint() {
        let bounds = b(&[-3.0, 10.0, 0.0], &[5.0, 11.0, 100.0]);
        let mut rng = RngStream::new(2024);
        let draws = 100_000;
        let mut sum = [0.0; 3];
        for _ in 0..draws {
            let p = bounds.random_point(&mut rng);
            assert!(bounds.contains(&p));
            for (s, v) in sum.iter_mut().zip(p.iter()) {
                *s += v;
            }
        }
        for i in 0..3 {
            let mean = sum[i] / draws as f64;
            let width = bounds.upper()[i] - bounds.lower()[i];
            let stderr = width / 12f64.sqrt() / (draws as f64).sqrt();
            let mid = bounds.midpoint()[i];
            assert!((mean - mid).abs() < 3.0 * stderr, "coord {i}: {mean} vs {mid}");
        }
    }
}
