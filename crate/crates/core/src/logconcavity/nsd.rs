//! Exact negative semidefiniteness by fraction-free symmetric elimination.
//!
//! The test runs Bareiss-style elimination on `P = -Q` scaled to integers,
//! always pivoting on the diagonal. A negative diagonal entry, or a zero
//! diagonal entry with a nonzero off-diagonal entry in its row, proves that
//! `P` is not positive semidefinite; a zero row is dropped. Every pivot step
//! is recorded so a witness found in a Schur complement can be lifted back
//! to a vector `v` with `vᵀQv > 0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::matrix::SymmetricMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NsdVerdict {
    NegativeSemidefinite,
    /// `witness` satisfies `witnessᵀ Q witness > 0`.
    Indefinite { witness: Vec<BigRational> },
}

impl NsdVerdict {
    pub fn is_nsd(&self) -> bool {
        matches!(self, NsdVerdict::NegativeSemidefinite)
    }

    pub fn witness(&self) -> Option<&[BigRational]> {
        match self {
            NsdVerdict::NegativeSemidefinite => None,
            NsdVerdict::Indefinite { witness } => Some(witness),
        }
    }
}

struct PivotStep {
    index: usize,
    pivot: BigInt,
    // (column, entry) of the pivot row restricted to the indices still active
    row: Vec<(usize, BigInt)>,
}

pub fn is_negative_semidefinite(q: &SymmetricMatrix) -> NsdVerdict {
    let n = q.dim();
    let mut a = negated_integer_rows(q);
    let mut active: Vec<usize> = (0..n).collect();
    let mut steps: Vec<PivotStep> = Vec::new();
    let mut prev = BigInt::one();

    while let Some(&k) = active.first() {
        let others: Vec<usize> = active[1..].to_vec();
        let pivot = a[k][k].clone();
        if pivot.is_negative() {
            return lift(unit(n, k), &steps, q);
        }
        if pivot.is_zero() {
            if let Some(&j) = others.iter().find(|&&j| !a[k][j].is_zero()) {
                // x = t e_k + e_j gives 2 t a_kj + a_jj; pick t to make it negative.
                let mut w = vec![BigInt::zero(); n];
                let magnitude = a[j][j].abs() + BigInt::one();
                w[k] = if a[k][j].is_positive() { -magnitude } else { magnitude };
                w[j] = BigInt::one();
                return lift(w, &steps, q);
            }
            active.remove(0);
            continue;
        }
        let row: Vec<(usize, BigInt)> = others.iter().map(|&j| (j, a[k][j].clone())).collect();
        for &i in &others {
            for &j in &others {
                if j < i {
                    continue;
                }
                let value = (&pivot * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
                a[j][i] = value.clone();
                a[i][j] = value;
            }
        }
        prev = pivot.clone();
        steps.push(PivotStep { index: k, pivot, row });
        active.remove(0);
    }
    NsdVerdict::NegativeSemidefinite
}

fn unit(n: usize, k: usize) -> Vec<BigInt> {
    let mut w = vec![BigInt::zero(); n];
    w[k] = BigInt::one();
    w
}

/// `-Q` multiplied by the lcm of all denominators.
fn negated_integer_rows(q: &SymmetricMatrix) -> Vec<Vec<BigInt>> {
    let n = q.dim();
    let mut lcm = BigInt::one();
    for i in 0..n {
        for j in 0..n {
            lcm = lcm.lcm(q.get(i, j).denom());
        }
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let x = q.get(i, j);
                    -(x.numer() * (&lcm / x.denom()))
                })
                .collect()
        })
        .collect()
}

/// Undo the recorded pivots: for a pivot `p` with row `r`, the vector
/// `(-rᵀw / p, w)` has the same form value as `w` on the Schur complement.
/// Everything is scaled by `p` to stay integral.
fn lift(mut w: Vec<BigInt>, steps: &[PivotStep], q: &SymmetricMatrix) -> NsdVerdict {
    for step in steps.iter().rev() {
        let dot: BigInt = step.row.iter().map(|(j, r)| r * &w[*j]).sum();
        for x in w.iter_mut() {
            *x *= &step.pivot;
        }
        w[step.index] = -dot;
    }
    let g = w.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in w.iter_mut() {
            *x /= &g;
        }
    }
    let witness: Vec<BigRational> = w.into_iter().map(BigRational::from_integer).collect();
    debug_assert!(q.quadratic_form(&witness).is_positive(), "lifted witness must be positive");
    NsdVerdict::Indefinite { witness }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::rational;

    fn check(rows: &[&[i64]]) -> NsdVerdict {
        is_negative_semidefinite(&SymmetricMatrix::from_int_rows(rows).unwrap())
    }

    #[test]
    fn small_cases() {
        assert!(check(&[&[0, 0], &[0, 0]]).is_nsd());
        assert!(check(&[&[-1, 0], &[0, -2]]).is_nsd());
        assert_eq!(
            check(&[&[1, 0], &[0, -1]]),
            NsdVerdict::Indefinite {
                witness: vec![rational(1), rational(0)]
            }
        );
        assert!(check(&[]).is_nsd());
    }

    #[test]
    fn singular_and_zero_pivot_cases() {
        assert!(check(&[&[-1, 1], &[1, -1]]).is_nsd());
        assert!(check(&[&[0, 0, 0], &[0, -1, -1], &[0, -1, -1]]).is_nsd());
        // zero diagonal with a nonzero off-diagonal entry is indefinite
        let v = check(&[&[0, 1], &[1, 0]]);
        let q = SymmetricMatrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert!(q.quadratic_form(v.witness().unwrap()).is_positive());
        // indefiniteness hidden behind a pivot
        let rows: &[&[i64]] = &[&[-1, 2, 0], &[2, -4, 1], &[0, 1, -1]];
        let q = SymmetricMatrix::from_int_rows(rows).unwrap();
        let v = is_negative_semidefinite(&q);
        assert!(!v.is_nsd());
        assert!(q.quadratic_form(v.witness().unwrap()).is_positive());
    }

    #[test]
    fn lemma42_style_matrices() {
        assert!(check(&[&[-2, -2, 1], &[-2, -2, 1], &[1, 1, -2]]).is_nsd());
        assert!(check(&[&[-1, 1], &[1, -1]]).is_nsd());
        assert!(!check(&[&[4, -4], &[-4, 4]]).is_nsd());
    }

    #[test]
    fn rational_entries() {
        let q = SymmetricMatrix::from_rows(vec![
            vec![crate::polynomial::ratio(-1, 3), crate::polynomial::ratio(1, 2)],
            vec![crate::polynomial::ratio(1, 2), crate::polynomial::ratio(-3, 4)],
        ])
        .unwrap();
        // det = 1/4 - 1/4 = 0, trace < 0: NSD
        assert!(is_negative_semidefinite(&q).is_nsd());
        let q2 = q.add(&SymmetricMatrix::from_rows(vec![
            vec![rational(0), crate::polynomial::ratio(1, 100)],
            vec![crate::polynomial::ratio(1, 100), rational(0)],
        ])
        .unwrap());
        let v = is_negative_semidefinite(&q2);
        assert!(q2.quadratic_form(v.witness().unwrap()).is_positive());
    }
}
