//! Exact sparse multivariate polynomials over the rationals.
//!
//! A polynomial is a map from exponent vectors to nonzero [`BigRational`]
//! coefficients. Terms are kept in graded lexicographic order (total degree
//! first, then the exponent vector lexicographically), which is also the
//! order used when serializing.

mod affine;
mod generating;
mod json;
mod point;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use affine::AffineMap;
pub use generating::{bases_polynomial, bivariate_restriction, independence_polynomial, Y};
pub use json::{PolynomialJson, TermJson};
pub use point::EvaluationPoint;

use crate::matrix::SymmetricMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cannot parse coefficient {0:?} as a rational")]
    InvalidCoefficient(String),
}

fn check_len(expected: usize, found: usize) -> Result<(), PolyError> {
    if expected == found {
        Ok(())
    } else {
        Err(PolyError::DimensionMismatch { expected, found })
    }
}

/// Exponent vector of a monomial.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Exponent(Box<[u32]>);

impl Exponent {
    pub fn new(exps: impl Into<Box<[u32]>>) -> Self {
        Exponent(exps.into())
    }

    pub fn zero(nvars: usize) -> Self {
        Exponent(vec![0; nvars].into())
    }

    /// The unit vector `e_var`.
    pub fn unit(nvars: usize, var: usize) -> Self {
        let mut e = vec![0; nvars];
        e[var] = 1;
        Exponent(e.into())
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Variables with a positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl std::ops::Deref for Exponent {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, BigRational>,
}

pub fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> BigRational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Exponent::zero(nvars), c);
        p
    }

    /// The polynomial `x_var`.
    pub fn variable(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable {var} out of range for {nvars} variables");
        let mut p = Self::zero(nvars);
        p.add_term(Exponent::unit(nvars, var), BigRational::one());
        p
    }

    /// `coeff * x^exps`.
    pub fn monomial(exps: &[u32], coeff: BigRational) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(Exponent::new(exps), coeff);
        p
    }

    /// Sums the given terms; repeated exponents are combined and zeros dropped.
    pub fn from_terms<I, E>(nvars: usize, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = (E, BigRational)>,
        E: Into<Box<[u32]>>,
    {
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            let exps = Exponent::new(exps);
            check_len(nvars, exps.len())?;
            p.add_term(exps, c);
        }
        Ok(p)
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(nvars: usize, terms: &[(&[u32], i64)]) -> Result<Self, PolyError> {
        Self::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), rational(*c))))
    }

    fn add_term(&mut self, exps: Exponent, c: BigRational) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (graded lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> BigRational {
        self.terms
            .get(&Exponent::new(exps))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    /// Maximum total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// True when every term has the same total degree. The zero polynomial counts.
    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Exponent::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Variables that occur in some term, i.e. those with `∂_i f != 0`.
    pub fn active_variables(&self) -> Vec<usize> {
        let mut seen = vec![false; self.nvars];
        for e in self.terms.keys() {
            for v in e.support() {
                seen[v] = true;
            }
        }
        (0..self.nvars).filter(|&v| seen[v]).collect()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, BigRational::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∂f/∂x_var`.
    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars, "variable {var} out of range for {} variables", self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var];
            if k == 0 {
                continue;
            }
            let mut lowered = e.0.clone();
            lowered[var] -= 1;
            out.terms.insert(Exponent(lowered), c * BigInt::from(k));
        }
        out
    }

    /// `D_v f = Σ v_i ∂_i f`.
    pub fn directional_derivative(&self, direction: &[BigRational]) -> Result<Self, PolyError> {
        check_len(self.nvars, direction.len())?;
        let mut out = Self::zero(self.nvars);
        for (var, v) in direction.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            for (e, c) in self.partial_derivative(var).terms {
                out.add_term(e, c * v);
            }
        }
        Ok(out)
    }

    /// `∂^α f = Π ∂_i^{α_i} f`.
    pub fn derivative_multi(&self, alpha: &[u32]) -> Result<Self, PolyError> {
        check_len(self.nvars, alpha.len())?;
        let mut out = Self::zero(self.nvars);
        'terms: for (e, c) in &self.terms {
            let mut lowered = e.0.clone();
            let mut factor = BigInt::one();
            for (var, &a) in alpha.iter().enumerate() {
                if lowered[var] < a {
                    continue 'terms;
                }
                for step in 0..a {
                    factor *= lowered[var] - step;
                }
                lowered[var] -= a;
            }
            out.terms.insert(Exponent(lowered), c * factor);
        }
        Ok(out)
    }

    /// `powers[v][k] = x_v^k` for every exponent that occurs.
    fn power_table(&self, point: &[BigRational]) -> Vec<Vec<BigRational>> {
        let mut max_exp = vec![0u32; self.nvars];
        for e in self.terms.keys() {
            for (v, &k) in e.iter().enumerate() {
                max_exp[v] = max_exp[v].max(k);
            }
        }
        point
            .iter()
            .zip(&max_exp)
            .map(|(x, &m)| {
                let mut row = Vec::with_capacity(m as usize + 1);
                row.push(BigRational::one());
                for k in 1..=m as usize {
                    let next = &row[k - 1] * x;
                    row.push(next);
                }
                row
            })
            .collect()
    }

    pub fn evaluate(&self, point: &[BigRational]) -> Result<BigRational, PolyError> {
        check_len(self.nvars, point.len())?;
        let powers = self.power_table(point);
        let mut total = BigRational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for v in e.support() {
                term *= &powers[v][e[v] as usize];
            }
            total += term;
        }
        Ok(total)
    }

    pub fn evaluate_f64(&self, point: &[f64]) -> Result<f64, PolyError> {
        check_len(self.nvars, point.len())?;
        Ok(self
            .terms
            .iter()
            .map(|(e, c)| {
                e.support()
                    .fold(to_f64(c), |acc, v| acc * point[v].powi(e[v] as i32))
            })
            .sum())
    }

    pub fn gradient(&self, point: &[BigRational]) -> Result<Vec<BigRational>, PolyError> {
        check_len(self.nvars, point.len())?;
        let powers = self.power_table(point);
        let mut grad = vec![BigRational::zero(); self.nvars];
        for (e, c) in &self.terms {
            for i in e.support() {
                let mut term = c * BigInt::from(e[i]);
                for v in e.support() {
                    let k = e[v] - u32::from(v == i);
                    term *= &powers[v][k as usize];
                }
                grad[i] += term;
            }
        }
        Ok(grad)
    }

    pub fn hessian(&self, point: &[BigRational]) -> Result<SymmetricMatrix, PolyError> {
        check_len(self.nvars, point.len())?;
        let powers = self.power_table(point);
        let n = self.nvars;
        let mut h = vec![BigRational::zero(); n * n];
        for (e, c) in &self.terms {
            let support: Vec<usize> = e.support().collect();
            for (a, &i) in support.iter().enumerate() {
                for &j in &support[a..] {
                    let mult = if i == j {
                        e[i] * (e[i] - 1)
                    } else {
                        e[i] * e[j]
                    };
                    if mult == 0 {
                        continue;
                    }
                    let mut term = c * BigInt::from(mult);
                    for &v in &support {
                        let k = e[v] - u32::from(v == i) - u32::from(v == j);
                        term *= &powers[v][k as usize];
                    }
                    h[i * n + j] += &term;
                    if i != j {
                        h[j * n + i] += term;
                    }
                }
            }
        }
        Ok(SymmetricMatrix::from_row_major(n, h))
    }

    /// `f ∘ T` for the affine map `T(y) = A y + b`.
    pub fn substitute_affine(&self, map: &AffineMap) -> Result<Self, PolyError> {
        affine::substitute(self, map)
    }

    /// Shorthand for the canonical-order coefficient list of a polynomial in
    /// `[y, z]`: entry `k` is the coefficient of `y^{d-k} z^k`.
    pub fn bivariate_coefficients(&self) -> Option<Vec<BigRational>> {
        if self.nvars != 2 || !self.is_homogeneous() {
            return None;
        }
        let d = self.degree().unwrap_or(0);
        Some(
            (0..=d)
                .map(|k| self.coefficient(&[d - k, k]))
                .collect(),
        )
    }
}

pub(crate) fn to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Fall back to a ratio of floats when the direct conversion overflows.
        q.numer().to_f64().unwrap_or(f64::NAN) / q.denom().to_f64().unwrap_or(f64::NAN)
    })
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "adding polynomials in different rings");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, rhs.nvars, "multiplying polynomials in different rings");
        let mut out = SparsePolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Box<[u32]> = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.add_term(Exponent(e), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let (sign, abs) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if idx == 0 {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors: Vec<String> = e
                .support()
                .map(|v| match e[v] {
                    1 => format!("x{v}"),
                    k => format!("x{v}^{k}"),
                })
                .collect();
            if !abs.is_one() || factors.is_empty() {
                factors.insert(0, abs.to_string());
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}
