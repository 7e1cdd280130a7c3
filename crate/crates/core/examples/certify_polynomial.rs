//! Complete log-concavity certificates for arbitrary homogeneous polynomials.
//!
//! `cargo run --example certify_polynomial -- [polynomial.json]`

use mason_clc::logconcavity::CheckKind;
use mason_clc::polynomial::independence_polynomial;
use mason_clc::{certify_clc_quadratic_criterion, Matroid, SparsePolynomial};

fn show(name: &str, f: &SparsePolynomial) -> Result<(), Box<dyn std::error::Error>> {
    let cert = certify_clc_quadratic_criterion(f)?;
    let quadratics = cert.checks.iter().filter(|c| c.kind == CheckKind::QuadraticNsd).count();
    println!("{name}: {:?} after {} checks ({quadratics} quadratic)", cert.verdict, cert.checks.len());
    if let Some(failure) = &cert.failure_witness {
        println!("  failure at alpha {:?}: {}", failure.alpha, serde_json::to_string(&failure.witness)?);
        println!("  witness re-checks: {}", cert.verify_failure(f));
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    if let Some(path) = std::env::args().nth(1) {
        let f: SparsePolynomial = serde_json::from_str(&std::fs::read_to_string(&path)?)?;
        return show(&path, &f);
    }
    show("g of U(1,2)", &independence_polynomial(&Matroid::uniform(1, 2)?)?)?;
    show("g of U(2,3)", &independence_polynomial(&Matroid::uniform(2, 3)?)?)?;
    show("z1^2 + z2^2", &SparsePolynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)])?)?;
    show(
        "z1^3 + z2^3 + z1 z2 (z1 + z2)",
        &SparsePolynomial::from_int_terms(2, &[(&[3, 0], 1), (&[0, 3], 1), (&[2, 1], 1), (&[1, 2], 1)])?,
    )?;
    Ok(())
}
