//! Exact log-concavity checks and complete log-concavity certificates.

mod certificate;
mod conditions;
mod indecomposable;
mod matroid_cert;
mod nsd;
mod spectral;

use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use crate::matrix::SymmetricMatrix;
use crate::matroid::MatroidError;
use crate::polynomial::{PolyError, SparsePolynomial};

pub use certificate::{
    certify_clc_quadratic_criterion, CheckKind, CheckRecord, ClcCertificate, FailureWitness, Verdict, Witness,
};
pub use conditions::{lemma21_report, ConditionReport, Lemma21Report, SampledCondition};
pub use indecomposable::{is_indecomposable, Decomposition};
pub use matroid_cert::{certify_clc_matroid, matroid_quadratic_matrix};
pub use nsd::{is_negative_semidefinite, NsdVerdict};
pub use spectral::{spectral_nd_report, SpectralReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogConcavityError {
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial has a negative coefficient")]
    NegativeCoefficient,
    #[error("degree {degree:?} is below 2")]
    DegreeTooLow { degree: Option<u32> },
    #[error("polynomial vanishes at the evaluation point")]
    ZeroAtPoint,
    #[error("polynomial is negative at the evaluation point")]
    NegativeAtPoint,
    #[error("evaluation point has a negative coordinate")]
    NegativePoint,
    #[error("matroid has no non-loop elements")]
    AllLoops,
    #[error(transparent)]
    Polynomial(#[from] PolyError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Result of an exact local log-concavity test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalCheck {
    pub holds: bool,
    /// `(aᵀQa)Q − (Qa)(Qa)ᵀ` for `Q = ∇²f(a)`.
    pub matrix: SymmetricMatrix,
    pub witness: Option<Vec<BigRational>>,
}

/// `(aᵀQa)Q − (Qa)(Qa)ᵀ`.
pub fn lemma21_matrix(q: &SymmetricMatrix, a: &[BigRational]) -> SymmetricMatrix {
    let qa = q.mul_vec(a);
    let aqa: BigRational = qa.iter().zip(a).map(|(x, y)| x * y).sum();
    q.scale(&aqa).sub(&SymmetricMatrix::outer(&qa))
}

/// Basis of the orthogonal complement of a nonzero `w`: `e_j − (w_j / w_p) e_p`
/// for every `j ≠ p`, where `p` is the first nonzero coordinate.
pub fn orthogonal_complement(w: &[BigRational]) -> Option<Vec<Vec<BigRational>>> {
    let p = w.iter().position(|x| !x.is_zero())?;
    Some(
        (0..w.len())
            .filter(|&j| j != p)
            .map(|j| {
                let mut v = vec![BigRational::zero(); w.len()];
                v[j] = BigRational::from_integer(1.into());
                v[p] = -(&w[j] / &w[p]);
                v
            })
            .collect(),
    )
}

pub(crate) fn check_shape(f: &SparsePolynomial) -> Result<(), LogConcavityError> {
    if !f.has_nonnegative_coefficients() {
        return Err(LogConcavityError::NegativeCoefficient);
    }
    if !f.is_homogeneous() {
        return Err(LogConcavityError::NotHomogeneous);
    }
    Ok(())
}

fn check_point(f: &SparsePolynomial, a: &[BigRational]) -> Result<BigRational, LogConcavityError> {
    if a.len() != f.nvars() {
        return Err(PolyError::DimensionMismatch {
            expected: f.nvars(),
            found: a.len(),
        }
        .into());
    }
    if a.iter().any(|x| x < &BigRational::zero()) {
        return Err(LogConcavityError::NegativePoint);
    }
    let value = f.evaluate(a)?;
    if value.is_zero() && !f.is_zero() {
        return Err(LogConcavityError::ZeroAtPoint);
    }
    Ok(value)
}

/// Whether `log f` is concave at `a`, decided exactly through the matrix
/// `(aᵀQa)Q − (Qa)(Qa)ᵀ`. The zero polynomial and forms of degree at most one
/// count as log-concave.
pub fn log_concave_at(f: &SparsePolynomial, a: &[BigRational]) -> Result<LocalCheck, LogConcavityError> {
    check_shape(f)?;
    check_point(f, a)?;
    if f.degree().map_or(true, |d| d < 2) {
        return Ok(LocalCheck {
            holds: true,
            matrix: SymmetricMatrix::zeros(f.nvars()),
            witness: None,
        });
    }
    let q = f.hessian(a)?;
    let matrix = lemma21_matrix(&q, a);
    let verdict = is_negative_semidefinite(&matrix);
    Ok(LocalCheck {
        holds: verdict.is_nsd(),
        witness: verdict.witness().map(<[_]>::to_vec),
        matrix,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::rational;

    fn ones(n: usize) -> Vec<BigRational> {
        vec![rational(1); n]
    }

    #[test]
    fn local_examples() {
        let f = SparsePolynomial::from_int_terms(2, &[(&[1, 1], 1)]).unwrap();
        let c = log_concave_at(&f, &ones(2)).unwrap();
        assert!(c.holds);
        assert_eq!(c.matrix, SymmetricMatrix::from_int_rows(&[&[-1, 1], &[1, -1]]).unwrap());

        let g = SparsePolynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)]).unwrap();
        let c = log_concave_at(&g, &ones(2)).unwrap();
        assert!(!c.holds);
        assert_eq!(c.matrix, SymmetricMatrix::from_int_rows(&[&[4, -4], &[-4, 4]]).unwrap());
        assert!(c.matrix.quadratic_form(c.witness.as_ref().unwrap()) > rational(0));

        let h = SparsePolynomial::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)]).unwrap();
        let c = log_concave_at(&h, &ones(2)).unwrap();
        assert!(c.holds && c.matrix.is_zero());
    }

    #[test]
    fn local_preconditions() {
        let f = SparsePolynomial::from_int_terms(2, &[(&[1, 1], 1)]).unwrap();
        assert_eq!(
            log_concave_at(&f, &[rational(1), rational(0)]).unwrap_err(),
            LogConcavityError::ZeroAtPoint
        );
        assert_eq!(
            log_concave_at(&f, &[rational(-1), rational(1)]).unwrap_err(),
            LogConcavityError::NegativePoint
        );
        let neg = SparsePolynomial::from_int_terms(2, &[(&[1, 1], -1)]).unwrap();
        assert_eq!(log_concave_at(&neg, &ones(2)).unwrap_err(), LogConcavityError::NegativeCoefficient);
        let mixed = SparsePolynomial::from_int_terms(2, &[(&[1, 1], 1), (&[1, 0], 1)]).unwrap();
        assert_eq!(log_concave_at(&mixed, &ones(2)).unwrap_err(), LogConcavityError::NotHomogeneous);
        assert!(log_concave_at(&SparsePolynomial::zero(2), &ones(2)).unwrap().holds);
        let linear = SparsePolynomial::from_int_terms(2, &[(&[1, 0], 3)]).unwrap();
        assert!(log_concave_at(&linear, &ones(2)).unwrap().holds);
    }

    #[test]
    fn complement_is_orthogonal() {
        let w = vec![rational(0), rational(2), rational(-3)];
        let basis = orthogonal_complement(&w).unwrap();
        assert_eq!(basis.len(), 2);
        for v in &basis {
            let dot: BigRational = v.iter().zip(&w).map(|(a, b)| a * b).sum();
            assert!(dot.is_zero());
        }
        assert!(orthogonal_complement(&[rational(0)]).is_none());
    }
}
