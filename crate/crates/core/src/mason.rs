//! Ultra-log-concavity of independent-set counts, checked three ways: directly
//! on the sequence, through 2×2 minors of the bivariate generating polynomial,
//! and through a complete log-concavity certificate.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::logconcavity::{certify_clc_matroid, ClcCertificate, LogConcavityError};
use crate::matrix::SymmetricMatrix;
use crate::matroid::{Matroid, MatroidError};
use crate::polynomial::{bivariate_restriction, SparsePolynomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MasonError {
    #[error("sequence has {found} entries, expected n + 1 = {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("entry {index} is negative ({value})")]
    NegativeEntry { index: usize, value: i64 },
    #[error("expected a homogeneous polynomial in two variables")]
    NotBivariate,
    #[error("coefficient of y^{} z^{index} is negative", .degree - .index)]
    NegativeCoefficient { index: usize, degree: usize },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    LogConcavity(#[from] LogConcavityError),
}

/// `lhs ≥ rhs`, with both sides as exact integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    #[serde(serialize_with = "crate::exact::display")]
    pub lhs: BigUint,
    #[serde(serialize_with = "crate::exact::display")]
    pub rhs: BigUint,
    pub holds: bool,
    /// `I_{k−1} I_{k+1} = 0`, so the inequality holds trivially.
    pub vacuous: bool,
}

impl Comparison {
    fn new(lhs: BigUint, rhs: BigUint) -> Self {
        Comparison {
            holds: lhs >= rhs,
            vacuous: rhs.is_zero(),
            lhs,
            rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KRecord {
    pub k: usize,
    /// `1 < k < n`, the range the ultra-log-concavity theorem is stated for.
    pub interior: bool,
    /// `I_k² ≥ I_{k−1} I_{k+1}`.
    pub log_concave: Comparison,
    /// `k I_k² ≥ (k+1) I_{k−1} I_{k+1}`.
    pub strong: Comparison,
    /// `I_k² C(n,k−1) C(n,k+1) ≥ I_{k−1} I_{k+1} C(n,k)²`.
    pub ultra: Comparison,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankSequenceReport {
    pub n: usize,
    pub sequence: Vec<u64>,
    pub records: Vec<KRecord>,
    pub log_concave: bool,
    pub strong: bool,
    pub ultra: bool,
}

impl RankSequenceReport {
    /// Per-k implications ultra ⇒ strong ⇒ log-concave.
    pub fn forms_nested(&self) -> bool {
        self.records
            .iter()
            .all(|r| (!r.ultra.holds || r.strong.holds) && (!r.strong.holds || r.log_concave.holds))
    }
}

fn binomials(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for k in 0..n {
        let next = &row[k] * BigUint::from(n - k) / BigUint::from(k + 1);
        row.push(next);
    }
    row
}

pub fn check_ultra_log_concave(seq: &[i64], n: usize) -> Result<RankSequenceReport, MasonError> {
    if seq.len() != n + 1 {
        return Err(MasonError::LengthMismatch {
            expected: n + 1,
            found: seq.len(),
        });
    }
    if let Some((index, &value)) = seq.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(MasonError::NegativeEntry { index, value });
    }
    let sequence: Vec<u64> = seq.iter().map(|&v| v as u64).collect();
    let big: Vec<BigUint> = sequence.iter().map(|&v| BigUint::from(v)).collect();
    let binom = binomials(n);
    let records: Vec<KRecord> = (1..n)
        .map(|k| {
            let square = &big[k] * &big[k];
            let outer = &big[k - 1] * &big[k + 1];
            KRecord {
                k,
                interior: k > 1,
                log_concave: Comparison::new(square.clone(), outer.clone()),
                strong: Comparison::new(&square * BigUint::from(k), &outer * BigUint::from(k + 1)),
                ultra: Comparison::new(
                    &square * &binom[k - 1] * &binom[k + 1],
                    &outer * &binom[k] * &binom[k],
                ),
            }
        })
        .collect();
    Ok(RankSequenceReport {
        n,
        log_concave: records.iter().all(|r| r.log_concave.holds),
        strong: records.iter().all(|r| r.strong.holds),
        ultra: records.iter().all(|r| r.ultra.holds),
        sequence,
        records,
    })
}

/// Hessian of the quadratic `∂_y^{n−k−1} ∂_z^{k−1} f` for one `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GurvitsRecord {
    pub k: usize,
    pub interior: bool,
    pub hessian: SymmetricMatrix,
    #[serde(serialize_with = "crate::exact::rational")]
    pub determinant: BigRational,
    pub nonpositive: bool,
}

fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `f = Σ c_k y^{n−k} z^k`. Uses `∂_y^{n−m} ∂_z^m f = (n−m)! m! c_m`.
pub fn gurvits_minor_checks(f: &SparsePolynomial) -> Result<Vec<GurvitsRecord>, MasonError> {
    let coeffs = f.bivariate_coefficients().ok_or(MasonError::NotBivariate)?;
    let n = coeffs.len() - 1;
    if let Some(index) = coeffs.iter().position(|c| c.is_negative()) {
        return Err(MasonError::NegativeCoefficient { index, degree: n });
    }
    let entry = |m: usize| BigRational::from_integer(factorial(n - m) * factorial(m)) * &coeffs[m];
    Ok((1..n)
        .map(|k| {
            let (a, b, c) = (entry(k - 1), entry(k), entry(k + 1));
            let determinant = &a * &c - &b * &b;
            GurvitsRecord {
                k,
                interior: k > 1,
                hessian: SymmetricMatrix::from_rows(vec![vec![a, b.clone()], vec![b, c]])
                    .expect("2x2 symmetric by construction"),
                nonpositive: !determinant.is_positive(),
                determinant,
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MasonReport {
    pub sequence: RankSequenceReport,
    pub certificate: ClcCertificate,
    pub gurvits: Vec<GurvitsRecord>,
    /// Each determinant is non-positive exactly when the ultra log-concavity
    /// bound holds at the same `k`.
    pub consistent: bool,
}

impl MasonReport {
    pub fn all_hold(&self) -> bool {
        self.consistent && self.sequence.ultra && self.certificate.is_accepted()
    }
}

pub fn mason_report(m: &Matroid) -> Result<MasonReport, MasonError> {
    let counts = m.count_independent_by_size()?;
    let seq: Vec<i64> = counts.iter().map(|&c| c as i64).collect();
    let sequence = check_ultra_log_concave(&seq, m.size())?;
    let certificate = certify_clc_matroid(m)?;
    let gurvits = gurvits_minor_checks(&bivariate_restriction(m)?)?;
    let matches = gurvits.len() == sequence.records.len()
        && gurvits
            .iter()
            .zip(&sequence.records)
            .all(|(g, r)| g.k == r.k && g.nonpositive == r.ultra.holds);
    let consistent = certificate.is_accepted()
        && gurvits.iter().all(|g| g.nonpositive)
        && sequence.ultra
        && sequence.forms_nested()
        && matches;
    Ok(MasonReport {
        sequence,
        certificate,
        gurvits,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::{ratio, rational};

    #[test]
    fn uniform_two_three_counts() {
        let r = check_ultra_log_concave(&[1, 3, 3, 0], 3).unwrap();
        assert!(r.ultra && r.strong && r.log_concave);
        let k1 = &r.records[0];
        assert_eq!(k1.k, 1);
        assert!(!k1.interior);
        // 9·1·3 = 27 vs 1·3·9 = 27
        assert_eq!(k1.ultra.lhs, BigUint::from(27u32));
        assert_eq!(k1.ultra.rhs, BigUint::from(27u32));
        let k2 = &r.records[1];
        assert!(k2.ultra.vacuous && k2.ultra.holds);
    }

    #[test]
    fn parallel_pair_counts() {
        let r = check_ultra_log_concave(&[1, 3, 2, 0], 3).unwrap();
        assert_eq!(r.records[0].ultra.lhs, BigUint::from(27u32));
        assert_eq!(r.records[0].ultra.rhs, BigUint::from(18u32));
        assert!(r.ultra);
    }

    #[test]
    fn binomial_rows_are_tight() {
        for n in 1..10 {
            let seq: Vec<i64> = binomials(n).iter().map(|b| b.to_string().parse().unwrap()).collect();
            let r = check_ultra_log_concave(&seq, n).unwrap();
            assert!(r.records.iter().all(|k| k.ultra.lhs == k.ultra.rhs));
        }
    }

    #[test]
    fn sequence_errors() {
        assert_eq!(
            check_ultra_log_concave(&[1, 2], 3).unwrap_err(),
            MasonError::LengthMismatch { expected: 4, found: 2 }
        );
        assert_eq!(
            check_ultra_log_concave(&[1, -2, 1], 2).unwrap_err(),
            MasonError::NegativeEntry { index: 1, value: -2 }
        );
        let bad = check_ultra_log_concave(&[1, 1, 5], 2).unwrap();
        assert!(!bad.log_concave && !bad.ultra);
    }

    #[test]
    fn gurvits_examples() {
        let cube = SparsePolynomial::from_int_terms(2, &[(&[3, 0], 1), (&[2, 1], 3), (&[1, 2], 3), (&[0, 3], 1)]).unwrap();
        let recs = gurvits_minor_checks(&cube).unwrap();
        assert_eq!(recs[0].hessian, SymmetricMatrix::from_int_rows(&[&[6, 6], &[6, 6]]).unwrap());
        assert_eq!(recs[0].determinant, rational(0));

        let pair = SparsePolynomial::from_int_terms(2, &[(&[3, 0], 1), (&[2, 1], 3), (&[1, 2], 2)]).unwrap();
        let recs = gurvits_minor_checks(&pair).unwrap();
        assert_eq!(recs[0].hessian, SymmetricMatrix::from_int_rows(&[&[6, 6], &[6, 4]]).unwrap());
        assert_eq!(recs[0].determinant, rational(-12));
        assert_eq!(recs[0].hessian.get(1, 1), &(rational(6) * ratio(2, 3)));

        let square = SparsePolynomial::from_int_terms(2, &[(&[2, 0], 1)]).unwrap();
        let recs = gurvits_minor_checks(&square).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].determinant, rational(0));

        let three = SparsePolynomial::from_int_terms(3, &[(&[2, 0, 0], 1)]).unwrap();
        assert_eq!(gurvits_minor_checks(&three).unwrap_err(), MasonError::NotBivariate);
    }

    #[test]
    fn pipeline() {
        let r = mason_report(&Matroid::uniform(2, 3).unwrap()).unwrap();
        assert!(r.all_hold());
        let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(mason_report(&k4).unwrap().all_hold());
        let lone_loop = mason_report(&Matroid::uniform(0, 1).unwrap()).unwrap();
        assert!(lone_loop.all_hold());
        assert!(lone_loop.sequence.records.is_empty());
    }
}
