use std::ops::Deref;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::rational;

/// A point of evaluation (or a direction vector) with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationPoint(Vec<BigRational>);

impl EvaluationPoint {
    pub fn new(coords: Vec<BigRational>) -> Self {
        EvaluationPoint(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        EvaluationPoint(coords.iter().map(|&c| rational(c)).collect())
    }

    /// The all-ones vector.
    pub fn ones(dim: usize) -> Self {
        EvaluationPoint(vec![BigRational::one(); dim])
    }

    /// The standard basis vector `e_index`.
    pub fn unit(dim: usize, index: usize) -> Self {
        let mut coords = vec![BigRational::zero(); dim];
        coords[index] = BigRational::one();
        EvaluationPoint(coords)
    }

    /// Indicator vector of `indices`.
    pub fn indicator(dim: usize, indices: &[usize]) -> Self {
        let mut coords = vec![BigRational::zero(); dim];
        for &i in indices {
            coords[i] = BigRational::one();
        }
        EvaluationPoint(coords)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|c| c.is_positive())
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<BigRational> {
        self.0
    }
}

impl Deref for EvaluationPoint {
    type Target = [BigRational];

    fn deref(&self) -> &[BigRational] {
        &self.0
    }
}

impl From<Vec<BigRational>> for EvaluationPoint {
    fn from(coords: Vec<BigRational>) -> Self {
        EvaluationPoint(coords)
    }
}
