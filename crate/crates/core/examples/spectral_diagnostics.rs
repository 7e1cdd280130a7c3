//! Eigenvalues of the Hessian of log f at a point (floating point).

use mason_clc::polynomial::{bases_polynomial, independence_polynomial};
use mason_clc::{spectral_nd_report, Matroid, SparsePolynomial};
use num_rational::BigRational;

fn ones(n: usize) -> Vec<BigRational> {
    vec![BigRational::from_integer(1.into()); n]
}

fn show(name: &str, f: &SparsePolynomial) -> Result<(), Box<dyn std::error::Error>> {
    let r = spectral_nd_report(f, &ones(f.nvars()), 1e-9)?;
    println!(
        "{name}: eigenvalues {:?}, Hessian positive eigenvalues {}",
        r.eigenvalues, r.hessian_positive_eigenvalues
    );
    println!("  f(1)∂i∂j f(1) - ∂i f(1) ∂j f(1) = {:?}", r.numerators);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)])?;
    show("bases of K3", &bases_polynomial(&k3)?)?;
    show("independent sets of K3", &independence_polynomial(&k3)?)?;
    show("independent sets of U(2,4)", &independence_polynomial(&Matroid::uniform(2, 4)?)?)?;
    Ok(())
}
