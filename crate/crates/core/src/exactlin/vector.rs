use std::ops::Index;

use super::Scalar;
use crate::error::{ensure_dim, Result};

/// Coordinates of an element in the fixed basis `e_0, …, e_{d-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Vector(Vec<Scalar>);

impl Vector {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Vector(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    /// The basis vector `e_i`.
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = Scalar::one();
        v
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Vector(coords.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Vector) -> Result<Vector> {
        ensure_dim("vector addition", self.dim(), other.dim())?;
        Ok(Vector(
            self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Vector) -> Result<Vector> {
        ensure_dim("vector subtraction", self.dim(), other.dim())?;
        Ok(Vector(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        Vector(self.0.iter().map(|a| a * c).collect())
    }

    /// `self += c * other`, dimensions assumed equal.
    pub(crate) fn axpy(&mut self, c: &Scalar, other: &[Scalar]) {
        if c.is_zero() {
            return;
        }
        for (a, b) in self.0.iter_mut().zip(other) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
    }
}

impl Index<usize> for Vector {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl From<Vec<Scalar>> for Vector {
    fn from(v: Vec<Scalar>) -> Self {
        Vector(v)
    }
}
