//! Generating polynomials of a matroid.
//!
//! Polynomials built from a matroid on labels `1..=n` use variable `Y = 0`
//! for the homogenizing variable and variable `i` for `z_i`.

use num_rational::BigRational;
use num_traits::One;

use super::{rational, Exponent, SparsePolynomial};
use crate::matroid::{Matroid, MatroidError};

/// Index of the homogenizing variable `y`.
pub const Y: usize = 0;

/// `g_M = Σ_{I independent} y^{|E| - |I|} z^I`, homogeneous of degree `|E|`
/// in `n + 1` variables.
pub fn independence_polynomial(m: &Matroid) -> Result<SparsePolynomial, MatroidError> {
    let nvars = m.label_count() + 1;
    let size = m.size() as u32;
    let mut p = SparsePolynomial::zero(nvars);
    for set in m.independent_sets()? {
        let mut e = vec![0u32; nvars];
        e[Y] = size - set.len() as u32;
        for i in set.iter() {
            e[i] = 1;
        }
        p.terms.insert(Exponent::new(e), BigRational::one());
    }
    Ok(p)
}

/// `p_M = Σ_{B basis} z^B` in the `n` variables `z_1..z_n` (variable `i - 1` is `z_i`).
pub fn bases_polynomial(m: &Matroid) -> Result<SparsePolynomial, MatroidError> {
    let nvars = m.label_count();
    let mut p = SparsePolynomial::zero(nvars);
    for basis in m.bases()? {
        let mut e = vec![0u32; nvars];
        for i in basis.iter() {
            e[i - 1] = 1;
        }
        p.terms.insert(Exponent::new(e), BigRational::one());
    }
    Ok(p)
}

/// `f_M(y, z) = Σ_k I_k y^{|E| - k} z^k`.
pub fn bivariate_restriction(m: &Matroid) -> Result<SparsePolynomial, MatroidError> {
    let counts = m.count_independent_by_size()?;
    let size = m.size() as u32;
    let mut p = SparsePolynomial::zero(2);
    for (k, &c) in counts.iter().enumerate() {
        p.add_term(Exponent::new(vec![size - k as u32, k as u32]), rational(c as i64));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element_set::ElementSet;

    fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> SparsePolynomial {
        SparsePolynomial::from_int_terms(nvars, terms).unwrap()
    }

    fn parallel_pair_plus_free() -> Matroid {
        Matroid::from_independence_family(3, [vec![], vec![1], vec![2], vec![3], vec![1, 3], vec![2, 3]])
            .unwrap()
    }

    #[test]
    fn independence_polynomials() {
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(
            independence_polynomial(&u12).unwrap(),
            poly(3, &[(&[2, 0, 0], 1), (&[1, 1, 0], 1), (&[1, 0, 1], 1)])
        );
        let single_loop = Matroid::uniform(0, 1).unwrap();
        assert_eq!(independence_polynomial(&single_loop).unwrap(), poly(2, &[(&[1, 0], 1)]));
        let u23 = Matroid::uniform(2, 3).unwrap();
        let g = independence_polynomial(&u23).unwrap();
        assert_eq!(
            g,
            poly(
                4,
                &[
                    (&[3, 0, 0, 0], 1),
                    (&[2, 1, 0, 0], 1),
                    (&[2, 0, 1, 0], 1),
                    (&[2, 0, 0, 1], 1),
                    (&[1, 1, 1, 0], 1),
                    (&[1, 1, 0, 1], 1),
                    (&[1, 0, 1, 1], 1),
                ]
            )
        );
        assert_eq!(g.degree(), Some(3));
    }

    #[test]
    fn rank_zero_matroid_is_a_power_of_y() {
        let g = independence_polynomial(&Matroid::uniform(0, 3).unwrap()).unwrap();
        assert_eq!(g, poly(4, &[(&[3, 0, 0, 0], 1)]));
    }

    #[test]
    fn bases_polynomials() {
        let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            bases_polynomial(&k3).unwrap(),
            poly(3, &[(&[1, 1, 0], 1), (&[1, 0, 1], 1), (&[0, 1, 1], 1)])
        );
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert_eq!(bases_polynomial(&u12).unwrap(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        let rank0 = Matroid::uniform(0, 2).unwrap();
        assert_eq!(bases_polynomial(&rank0).unwrap(), poly(2, &[(&[0, 0], 1)]));
    }

    #[test]
    fn bivariate_restrictions() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(
            bivariate_restriction(&u23).unwrap(),
            poly(2, &[(&[3, 0], 1), (&[2, 1], 3), (&[1, 2], 3)])
        );
        let single_loop = Matroid::uniform(0, 1).unwrap();
        assert_eq!(bivariate_restriction(&single_loop).unwrap(), poly(2, &[(&[1, 0], 1)]));
        assert_eq!(
            bivariate_restriction(&parallel_pair_plus_free()).unwrap(),
            poly(2, &[(&[3, 0], 1), (&[2, 1], 3), (&[1, 2], 2)])
        );
    }

    #[test]
    fn contraction_derivative_example() {
        let m = parallel_pair_plus_free();
        let g = independence_polynomial(&m).unwrap();
        let d = g.derivative_multi(&[0, 0, 0, 1]).unwrap();
        let contracted = m.contract(ElementSet::from_elements([3])).unwrap();
        let expected = poly(4, &[(&[2, 0, 0, 0], 1), (&[1, 1, 0, 0], 1), (&[1, 0, 1, 0], 1)]);
        assert_eq!(d, expected);
        assert_eq!(independence_polynomial(&contracted).unwrap(), expected);
        // repeated or dependent indices kill every monomial
        assert!(g.derivative_multi(&[0, 2, 0, 0]).unwrap().is_zero());
        assert!(g.derivative_multi(&[0, 1, 1, 0]).unwrap().is_zero());
    }
}
