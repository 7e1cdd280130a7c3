//! Dense symmetric matrices with exact rational entries.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::polynomial::{rational, to_f64};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("row {row} has length {len}, expected {dim}")]
    NotSquare { row: usize, len: usize, dim: usize },
    #[error("entry ({i},{j}) differs from ({j},{i})")]
    NotSymmetric { i: usize, j: usize },
}

#[derive(Clone, PartialEq, Eq)]
pub struct SymmetricMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl SymmetricMatrix {
    pub fn zeros(dim: usize) -> Self {
        SymmetricMatrix {
            dim,
            entries: vec![BigRational::zero(); dim * dim],
        }
    }

    /// Caller guarantees symmetry; checked in debug builds.
    pub(crate) fn from_row_major(dim: usize, entries: Vec<BigRational>) -> Self {
        debug_assert_eq!(entries.len(), dim * dim);
        let m = SymmetricMatrix { dim, entries };
        debug_assert!(m.first_asymmetry().is_none());
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, MatrixError> {
        let dim = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(MatrixError::NotSquare { row, len: r.len(), dim });
            }
        }
        let m = SymmetricMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        };
        match m.first_asymmetry() {
            Some((i, j)) => Err(MatrixError::NotSymmetric { i, j }),
            None => Ok(m),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, MatrixError> {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rational(x)).collect()).collect())
    }

    /// `v vᵀ`.
    pub fn outer(v: &[BigRational]) -> Self {
        let dim = v.len();
        let entries = (0..dim * dim).map(|k| &v[k / dim] * &v[k % dim]).collect();
        SymmetricMatrix { dim, entries }
    }

    fn first_asymmetry(&self) -> Option<(usize, usize)> {
        (0..self.dim)
            .flat_map(|i| (i + 1..self.dim).map(move |j| (i, j)))
            .find(|&(i, j)| self.get(i, j) != self.get(j, i))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i * self.dim + j]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        self.entries[j * self.dim + i] = value.clone();
        self.entries[i * self.dim + j] = value;
    }

    pub fn rows(&self) -> Vec<Vec<BigRational>> {
        self.entries.chunks(self.dim.max(1)).take(self.dim).map(<[_]>::to_vec).collect()
    }

    pub fn diagonal(&self) -> impl Iterator<Item = &BigRational> {
        (0..self.dim).map(|i| self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.dim);
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .filter(|&j| !v[j].is_zero())
                    .map(|j| self.get(i, j) * &v[j])
                    .sum()
            })
            .collect()
    }

    /// `vᵀ Q v`.
    pub fn quadratic_form(&self, v: &[BigRational]) -> BigRational {
        self.mul_vec(v).iter().zip(v).map(|(a, b)| a * b).sum()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        SymmetricMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        SymmetricMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub(&self, other: &SymmetricMatrix) -> Self {
        assert_eq!(self.dim, other.dim);
        SymmetricMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn add(&self, other: &SymmetricMatrix) -> Self {
        assert_eq!(self.dim, other.dim);
        SymmetricMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    /// Principal submatrix on `indices`, in the given order.
    pub fn principal_submatrix(&self, indices: &[usize]) -> Self {
        let dim = indices.len();
        let entries = indices
            .iter()
            .flat_map(|&i| indices.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        SymmetricMatrix { dim, entries }
    }

    /// Places `self` on the rows and columns `indices` of a `dim × dim` zero matrix.
    pub fn embed(&self, dim: usize, indices: &[usize]) -> Self {
        assert_eq!(indices.len(), self.dim);
        let mut out = SymmetricMatrix::zeros(dim);
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                out.entries[i * dim + j] = self.get(a, b).clone();
            }
        }
        out
    }

    /// `Bᵀ Q B` where `basis` lists the columns of `B`.
    pub fn congruence(&self, basis: &[Vec<BigRational>]) -> Self {
        let images: Vec<Vec<BigRational>> = basis.iter().map(|b| self.mul_vec(b)).collect();
        let k = basis.len();
        let mut entries = Vec::with_capacity(k * k);
        for bi in basis {
            for qbj in &images {
                entries.push(bi.iter().zip(qbj).map(|(x, y)| x * y).sum());
            }
        }
        SymmetricMatrix { dim: k, entries }
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.rows().iter().map(|r| r.iter().map(to_f64).collect()).collect()
    }

    pub fn to_nalgebra(&self) -> nalgebra::DMatrix<f64> {
        nalgebra::DMatrix::from_fn(self.dim, self.dim, |i, j| to_f64(self.get(i, j)))
    }
}

impl fmt::Debug for SymmetricMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

impl Serialize for SymmetricMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows()
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect())
            .collect();
        rows.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigRational> {
        x.iter().map(|&a| rational(a)).collect()
    }

    #[test]
    fn construction_checks() {
        assert!(SymmetricMatrix::from_int_rows(&[&[1, 2], &[2, 3]]).is_ok());
        assert_eq!(
            SymmetricMatrix::from_int_rows(&[&[1, 2], &[3, 3]]).unwrap_err(),
            MatrixError::NotSymmetric { i: 0, j: 1 }
        );
        assert!(matches!(
            SymmetricMatrix::from_int_rows(&[&[1, 2], &[2]]),
            Err(MatrixError::NotSquare { row: 1, .. })
        ));
        assert_eq!(SymmetricMatrix::zeros(0).rows().len(), 0);
    }

    #[test]
    fn products() {
        let q = SymmetricMatrix::from_int_rows(&[&[2, 1], &[1, -3]]).unwrap();
        assert_eq!(q.mul_vec(&v(&[1, 1])), v(&[3, -2]));
        assert_eq!(q.quadratic_form(&v(&[1, 1])), rational(1));
        assert_eq!(SymmetricMatrix::outer(&v(&[1, 2])), SymmetricMatrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap());
        let b = vec![v(&[1, 0]), v(&[1, 1])];
        assert_eq!(q.congruence(&b), SymmetricMatrix::from_int_rows(&[&[2, 3], &[3, 1]]).unwrap());
    }

    #[test]
    fn sub_and_embed() {
        let q = SymmetricMatrix::from_int_rows(&[&[1, 2, 3], &[2, 4, 5], &[3, 5, 6]]).unwrap();
        let sub = q.principal_submatrix(&[0, 2]);
        assert_eq!(sub, SymmetricMatrix::from_int_rows(&[&[1, 3], &[3, 6]]).unwrap());
        let back = sub.embed(3, &[0, 2]);
        assert_eq!(back, SymmetricMatrix::from_int_rows(&[&[1, 0, 3], &[0, 0, 0], &[3, 0, 6]]).unwrap());
    }
}
