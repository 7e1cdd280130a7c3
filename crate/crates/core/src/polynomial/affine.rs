use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{check_len, Exponent, PolyError, SparsePolynomial};

/// The affine map `T(y) = A y + b` from `m` new variables to `n` old ones.
///
/// `linear` holds the `n` rows of `A`, each of length `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    linear: Vec<Vec<BigRational>>,
    offset: Vec<BigRational>,
    inputs: usize,
}

impl AffineMap {
    pub fn new(linear: Vec<Vec<BigRational>>, offset: Vec<BigRational>) -> Result<Self, PolyError> {
        check_len(linear.len(), offset.len())?;
        let inputs = linear.first().map_or(0, Vec::len);
        for row in &linear {
            check_len(inputs, row.len())?;
        }
        Ok(AffineMap {
            linear,
            offset,
            inputs,
        })
    }

    /// A purely linear map.
    pub fn linear(linear: Vec<Vec<BigRational>>) -> Result<Self, PolyError> {
        let offset = vec![BigRational::zero(); linear.len()];
        Self::new(linear, offset)
    }

    pub fn identity(n: usize) -> Self {
        let linear = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { super::rational(1) } else { BigRational::zero() })
                    .collect()
            })
            .collect();
        Self::linear(linear).expect("square identity")
    }

    /// `(y, z) ↦ (y, z, .., z)` with `copies` copies of `z`.
    pub fn diagonal_restriction(copies: usize) -> Self {
        let mut linear = vec![vec![super::rational(1), BigRational::zero()]];
        for _ in 0..copies {
            linear.push(vec![BigRational::zero(), super::rational(1)]);
        }
        Self::linear(linear).expect("rectangular")
    }

    pub fn inputs(&self) -> usize {
        self.inputs
    }

    pub fn outputs(&self) -> usize {
        self.linear.len()
    }

    /// Entrywise nonnegative `A` and `b`, so the nonnegative orthant maps into itself.
    pub fn preserves_orthant(&self) -> bool {
        self.linear.iter().flatten().chain(&self.offset).all(|x| !x.is_negative())
    }

    /// The `i`-th output coordinate as a polynomial in the inputs.
    fn coordinate(&self, i: usize) -> SparsePolynomial {
        let m = self.inputs;
        let mut terms: Vec<(Exponent, BigRational)> = self.linear[i]
            .iter()
            .enumerate()
            .map(|(j, a)| (Exponent::unit(m, j), a.clone()))
            .collect();
        terms.push((Exponent::zero(m), self.offset[i].clone()));
        let mut p = SparsePolynomial::zero(m);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }
}

pub(super) fn substitute(f: &SparsePolynomial, map: &AffineMap) -> Result<SparsePolynomial, PolyError> {
    check_len(f.nvars(), map.outputs())?;
    let m = map.inputs();
    let mut max_exp = vec![0u32; f.nvars()];
    for (e, _) in f.terms() {
        for (v, &k) in e.iter().enumerate() {
            max_exp[v] = max_exp[v].max(k);
        }
    }
    // powers[v][k] = T_v(y)^k
    let powers: Vec<Vec<SparsePolynomial>> = max_exp
        .iter()
        .enumerate()
        .map(|(v, &k)| {
            let base = map.coordinate(v);
            let mut row = vec![SparsePolynomial::constant(m, super::rational(1))];
            for idx in 1..=k as usize {
                let next = &row[idx - 1] * &base;
                row.push(next);
            }
            row
        })
        .collect();

    let mut out = SparsePolynomial::zero(m);
    for (e, c) in f.terms() {
        let mut term = SparsePolynomial::constant(m, c.clone());
        for v in e.support() {
            term = &term * &powers[v][e[v] as usize];
        }
        out = &out + &term;
    }
    Ok(out)
}
