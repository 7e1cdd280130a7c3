use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{
    check_point, check_shape, is_negative_semidefinite, lemma21_matrix, log_concave_at, orthogonal_complement,
    LogConcavityError,
};
use crate::matrix::SymmetricMatrix;
use crate::polynomial::SparsePolynomial;

/// One exactly decided condition together with the matrix it was decided on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub holds: bool,
    pub matrix: SymmetricMatrix,
    #[serde(serialize_with = "crate::exact::opt_rationals")]
    pub witness: Option<Vec<BigRational>>,
}

impl ConditionReport {
    fn decide(matrix: SymmetricMatrix) -> Self {
        let verdict = is_negative_semidefinite(&matrix);
        ConditionReport {
            holds: verdict.is_nsd(),
            witness: verdict.witness().map(<[_]>::to_vec),
            matrix,
        }
    }
}

/// A condition quantified over all nonnegative `b`, checked on samples only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampledCondition {
    pub holds: bool,
    pub samples: usize,
    pub failures: usize,
    #[serde(serialize_with = "crate::exact::opt_rationals")]
    pub first_failure: Option<Vec<BigRational>>,
}

/// The equivalent local log-concavity conditions evaluated side by side at one point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Lemma21Report {
    pub degree: u32,
    #[serde(serialize_with = "crate::exact::rational")]
    pub value: BigRational,
    pub hessian: SymmetricMatrix,
    /// `f∇²f − ∇f∇fᵀ` is negative semidefinite.
    pub log_hessian: ConditionReport,
    /// `Q` restricted to `(Qa)^⊥`, in the coordinates of `complement`.
    pub complement_of_qa: ConditionReport,
    #[serde(serialize_with = "crate::exact::rational_rows")]
    pub complement: Vec<Vec<BigRational>>,
    pub sampled_complements: SampledCondition,
    /// Negative semidefinite on the `(n−1)`-dimensional space `(Qa)^⊥`.
    pub some_hyperplane: bool,
    pub rank_one_correction: ConditionReport,
    /// `D_a f` log-concave at `a`; only for degree at least 3.
    pub directional: Option<bool>,
    pub agree: bool,
}

pub fn lemma21_report(
    f: &SparsePolynomial,
    a: &[BigRational],
    samples: usize,
    seed: u64,
) -> Result<Lemma21Report, LogConcavityError> {
    check_shape(f)?;
    let degree = match f.degree() {
        Some(d) if d >= 2 => d,
        degree => return Err(LogConcavityError::DegreeTooLow { degree }),
    };
    let value = check_point(f, a)?;
    let n = f.nvars();
    let q = f.hessian(a)?;
    let grad = f.gradient(a)?;

    let log_hessian = ConditionReport::decide(q.scale(&value).sub(&SymmetricMatrix::outer(&grad)));

    let qa = q.mul_vec(a);
    let complement = orthogonal_complement(&qa).expect("Qa is nonzero when f(a) > 0 and d >= 2");
    let complement_of_qa = ConditionReport::decide(q.congruence(&complement));
    let some_hyperplane = complement.len() + 1 == n && complement_of_qa.holds;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sampled = SampledCondition {
        holds: true,
        samples: 0,
        failures: 0,
        first_failure: None,
    };
    let mut b = a.to_vec();
    for _ in 0..=samples {
        let qb = q.mul_vec(&b);
        if let Some(basis) = orthogonal_complement(&qb) {
            sampled.samples += 1;
            if !is_negative_semidefinite(&q.congruence(&basis)).is_nsd() {
                sampled.holds = false;
                sampled.failures += 1;
                sampled.first_failure.get_or_insert_with(|| b.clone());
            }
        }
        b = (0..n).map(|_| BigRational::from_integer(rng.random_range(0..=5).into())).collect();
    }

    let rank_one_correction = ConditionReport::decide(lemma21_matrix(&q, a));

    let directional = if degree >= 3 {
        let da = f.directional_derivative(a)?;
        Some(log_concave_at(&da, a)?.holds)
    } else {
        None
    };

    let exact = log_hessian.holds;
    let agree = complement_of_qa.holds == exact
        && some_hyperplane == exact
        && rank_one_correction.holds == exact
        && directional.map_or(true, |d| d == exact)
        && (sampled.holds || !exact);

    debug_assert!(!value.is_zero());
    Ok(Lemma21Report {
        degree,
        value,
        hessian: q,
        log_hessian,
        complement_of_qa,
        complement,
        sampled_complements: sampled,
        some_hyperplane,
        rank_one_correction,
        directional,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polynomial::rational;

    fn ones(n: usize) -> Vec<BigRational> {
        vec![rational(1); n]
    }

    fn all_conditions(r: &Lemma21Report) -> Vec<bool> {
        let mut v = vec![
            r.log_hessian.holds,
            r.complement_of_qa.holds,
            r.sampled_complements.holds,
            r.some_hyperplane,
            r.rank_one_correction.holds,
        ];
        v.extend(r.directional);
        v
    }

    #[test]
    fn product_satisfies_everything() {
        let f = SparsePolynomial::from_int_terms(2, &[(&[1, 1], 1)]).unwrap();
        let r = lemma21_report(&f, &ones(2), 20, 1).unwrap();
        assert!(all_conditions(&r).iter().all(|&x| x));
        assert!(r.agree);
        assert_eq!(r.directional, None);
    }

    #[test]
    fn sum_of_squares_fails_everything() {
        let f = SparsePolynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)]).unwrap();
        let r = lemma21_report(&f, &ones(2), 20, 1).unwrap();
        assert!(all_conditions(&r).iter().all(|&x| !x));
        assert!(r.agree);
        assert_eq!(r.sampled_complements.first_failure, Some(ones(2)));
    }

    #[test]
    fn cubic_uses_directional_derivative() {
        let f = SparsePolynomial::from_int_terms(2, &[(&[2, 1], 1)]).unwrap();
        let r = lemma21_report(&f, &ones(2), 20, 1).unwrap();
        assert_eq!(r.directional, Some(r.log_hessian.holds));
        assert!(r.agree);
    }

    #[test]
    fn rejects_low_degree() {
        let f = SparsePolynomial::from_int_terms(2, &[(&[1, 0], 1)]).unwrap();
        assert_eq!(
            lemma21_report(&f, &ones(2), 1, 1).unwrap_err(),
            LogConcavityError::DegreeTooLow { degree: Some(1) }
        );
    }
}
