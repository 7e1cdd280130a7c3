//! Matroids, their generating polynomials, and exact checks of log-concavity.
//!
//! The independence polynomial `g_M(y, z) = Σ_I y^{n−|I|} z^I` of a matroid
//! is completely log-concave. This crate builds matroids from explicit
//! families, uniform parameters, graphs or matrices; forms their generating
//! polynomials with rational coefficients; and certifies complete
//! log-concavity with exact semidefiniteness tests. The consequences for the
//! counts `I_k` of independent sets are checked in [`mason`].

pub mod cli;
pub mod corpus;
pub mod element_set;
pub mod exact;
pub mod logconcavity;
pub mod mason;
pub mod matrix;
pub mod matroid;
pub mod polynomial;

pub use element_set::ElementSet;
pub use logconcavity::{
    certify_clc_matroid, certify_clc_quadratic_criterion, is_indecomposable, is_negative_semidefinite,
    lemma21_report, log_concave_at, matroid_quadratic_matrix, spectral_nd_report, ClcCertificate, LogConcavityError,
};
pub use mason::{check_ultra_log_concave, gurvits_minor_checks, mason_report, MasonError};
pub use matrix::SymmetricMatrix;
pub use matroid::{Matroid, MatroidError, MatroidSpec};
pub use polynomial::{
    bases_polynomial, bivariate_restriction, independence_polynomial, EvaluationPoint, PolyError, SparsePolynomial,
};
