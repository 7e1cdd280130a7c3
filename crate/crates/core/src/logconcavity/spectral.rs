use nalgebra::SymmetricEigen;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::LogConcavityError;
use crate::matrix::SymmetricMatrix;
use crate::polynomial::{PolyError, SparsePolynomial};

/// Floating-point view of the Hessian of `log f` at a point. Diagnostic only.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralReport {
    #[serde(serialize_with = "crate::exact::rationals")]
    pub point: Vec<BigRational>,
    #[serde(serialize_with = "crate::exact::rational")]
    pub value: BigRational,
    /// `f∇²f − ∇f∇fᵀ` at the point, exactly.
    pub numerators: SymmetricMatrix,
    /// `(f∇²f − ∇f∇fᵀ) / f²` rounded to floats.
    pub log_hessian: Vec<Vec<f64>>,
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    pub max_eigenvalue: f64,
    /// Eigenvalues of `∇²f` above the tolerance.
    pub hessian_positive_eigenvalues: usize,
}

fn sorted_eigenvalues(m: &SymmetricMatrix) -> Vec<f64> {
    if m.dim() == 0 {
        return Vec::new();
    }
    let mut values: Vec<f64> = SymmetricEigen::new(m.to_nalgebra()).eigenvalues.iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

pub fn spectral_nd_report(
    f: &SparsePolynomial,
    a: &[BigRational],
    tolerance: f64,
) -> Result<SpectralReport, LogConcavityError> {
    if a.len() != f.nvars() {
        return Err(PolyError::DimensionMismatch {
            expected: f.nvars(),
            found: a.len(),
        }
        .into());
    }
    let value = f.evaluate(a)?;
    if value.is_zero() {
        return Err(LogConcavityError::ZeroAtPoint);
    }
    if value.is_negative() {
        return Err(LogConcavityError::NegativeAtPoint);
    }
    let hessian = f.hessian(a)?;
    let numerators = hessian.scale(&value).sub(&SymmetricMatrix::outer(&f.gradient(a)?));
    let log_hessian = numerators.scale(&(BigRational::from_integer(1.into()) / (&value * &value)));
    let eigenvalues = sorted_eigenvalues(&log_hessian);
    let max_eigenvalue = eigenvalues.last().copied().unwrap_or(0.0);
    let h = sorted_eigenvalues(&hessian);
    let scale = h.iter().fold(1.0f64, |acc, x| acc.max(x.abs()));
    let hessian_positive_eigenvalues = h.iter().filter(|&&x| x > tolerance * scale).count();
    Ok(SpectralReport {
        point: a.to_vec(),
        value,
        log_hessian: log_hessian.to_f64_rows(),
        numerators,
        eigenvalues,
        max_eigenvalue,
        hessian_positive_eigenvalues,
    })
}
