use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::{check_shape, is_indecomposable, is_negative_semidefinite, lemma21_matrix, Decomposition, LogConcavityError};
use crate::matrix::SymmetricMatrix;
use crate::polynomial::{Exponent, SparsePolynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Indecomposable,
    QuadraticNsd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Accepted,
    Rejected,
}

/// Evidence that a single check failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// The active variables of `∂^α f` split with no monomial crossing.
    Partition { left: Vec<usize>, right: Vec<usize> },
    /// `vᵀ((aᵀQa)Q − (Qa)(Qa)ᵀ)v > 0` where `Q` is the Hessian of `∂^α f`.
    PositiveDirection {
        #[serde(serialize_with = "crate::exact::rationals")]
        point: Vec<BigRational>,
        #[serde(serialize_with = "crate::exact::rationals")]
        vector: Vec<BigRational>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub alpha: Vec<u32>,
    pub kind: CheckKind,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Matrix the quadratic check was decided on.
    #[serde(skip)]
    pub matrix: Option<SymmetricMatrix>,
    /// Variables indexing the rows of `matrix`; `None` means all of them.
    #[serde(skip)]
    pub support: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    pub alpha: Vec<u32>,
    pub witness: Witness,
}

/// Outcome of the indecomposability and quadratic log-concavity criterion.
/// Acceptance proves complete log-concavity; rejection only says the
/// criterion failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClcCertificate {
    pub verdict: Verdict,
    pub checks: Vec<CheckRecord>,
    pub failure_witness: Option<FailureWitness>,
}

impl ClcCertificate {
    pub(crate) fn from_checks(mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| {
            Exponent::new(a.alpha.clone())
                .cmp(&Exponent::new(b.alpha.clone()))
                .then(a.kind.cmp(&b.kind))
        });
        let failure_witness = checks.iter().find(|c| !c.passed).map(|c| FailureWitness {
            alpha: c.alpha.clone(),
            witness: c.witness.clone().expect("failed checks carry witnesses"),
        });
        ClcCertificate {
            verdict: if failure_witness.is_some() { Verdict::Rejected } else { Verdict::Accepted },
            checks,
            failure_witness,
        }
    }

    pub fn is_accepted(&self) -> bool {
        self.verdict == Verdict::Accepted
    }

    /// Re-derives the failing check from `f` alone. False when there is no
    /// failure witness or it does not hold up.
    pub fn verify_failure(&self, f: &SparsePolynomial) -> bool {
        let Some(failure) = &self.failure_witness else {
            return false;
        };
        let Ok(g) = f.derivative_multi(&failure.alpha) else {
            return false;
        };
        match &failure.witness {
            Witness::Partition { left, right } => Decomposition {
                left: left.clone(),
                right: right.clone(),
            }
            .verify(&g),
            Witness::PositiveDirection { point, vector } => {
                if g.degree() != Some(2) || point.len() != g.nvars() || vector.len() != g.nvars() {
                    return false;
                }
                let Ok(value) = g.evaluate(point) else {
                    return false;
                };
                let Ok(q) = g.hessian(point) else {
                    return false;
                };
                value > BigRational::zero() && lemma21_matrix(&q, point).quadratic_form(vector) > BigRational::zero()
            }
        }
    }
}

pub(crate) fn indecomposable_record(alpha: Vec<u32>, g: &SparsePolynomial) -> CheckRecord {
    let result = is_indecomposable(g);
    CheckRecord {
        alpha,
        kind: CheckKind::Indecomposable,
        passed: result.is_ok(),
        witness: result.err().map(|d| Witness::Partition {
            left: d.left,
            right: d.right,
        }),
        matrix: None,
        support: None,
    }
}

/// A point where a nonzero quadratic with nonnegative coefficients is positive:
/// `e_i` for the first variable with a square term, otherwise the indicator of
/// the active variables.
pub(crate) fn quadratic_point(q: &SparsePolynomial) -> Vec<BigRational> {
    let n = q.nvars();
    let mut point = vec![BigRational::zero(); n];
    let square = q.terms().filter_map(|(e, _)| e.iter().position(|&x| x == 2)).min();
    match square {
        Some(i) => point[i] = BigRational::one(),
        None => {
            for i in q.active_variables() {
                point[i] = BigRational::one();
            }
        }
    }
    point
}

fn quadratic_record(alpha: Vec<u32>, q: &SparsePolynomial) -> Result<CheckRecord, LogConcavityError> {
    let point = quadratic_point(q);
    let matrix = lemma21_matrix(&q.hessian(&point)?, &point);
    let verdict = is_negative_semidefinite(&matrix);
    Ok(CheckRecord {
        alpha,
        kind: CheckKind::QuadraticNsd,
        passed: verdict.is_nsd(),
        witness: verdict.witness().map(|v| Witness::PositiveDirection {
            point: point.clone(),
            vector: v.to_vec(),
        }),
        matrix: Some(matrix),
        support: None,
    })
}

/// Checks every nonzero `∂^α f` with `|α| ≤ d − 2` for indecomposability and
/// every nonzero quadratic `∂^α f` with `|α| = d − 2` for log-concavity.
pub fn certify_clc_quadratic_criterion(f: &SparsePolynomial) -> Result<ClcCertificate, LogConcavityError> {
    check_shape(f)?;
    let degree = match f.degree() {
        Some(d) if d >= 2 => d,
        degree => return Err(LogConcavityError::DegreeTooLow { degree }),
    };
    let n = f.nvars();
    let mut level: Vec<(Exponent, SparsePolynomial)> = vec![(Exponent::zero(n), f.clone())];
    let mut checks = Vec::new();
    for order in 0..=degree - 2 {
        let last = order == degree - 2;
        let records: Vec<Vec<CheckRecord>> = level
            .par_iter()
            .map(|(alpha, g)| {
                let mut out = vec![indecomposable_record(alpha.to_vec(), g)];
                if last {
                    out.push(quadratic_record(alpha.to_vec(), g)?);
                }
                Ok(out)
            })
            .collect::<Result<_, LogConcavityError>>()?;
        checks.extend(records.into_iter().flatten());
        if last {
            break;
        }
        let mut next: BTreeMap<Exponent, (usize, usize)> = BTreeMap::new();
        for (idx, (alpha, g)) in level.iter().enumerate() {
            for var in g.active_variables() {
                let mut beta = alpha.to_vec();
                beta[var] += 1;
                next.entry(Exponent::new(beta)).or_insert((idx, var));
            }
        }
        level = next
            .into_par_iter()
            .map(|(beta, (idx, var))| (beta, level[idx].1.partial_derivative(var)))
            .collect();
    }
    Ok(ClcCertificate::from_checks(checks))
}
