//! Independence, bases and bivariate generating polynomials, and the identity
//! that differentiating by an independent set contracts it.

use mason_clc::polynomial::{bases_polynomial, bivariate_restriction, independence_polynomial};
use mason_clc::{ElementSet, Matroid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = Matroid::uniform(2, 3)?;
    let g = independence_polynomial(&m)?;
    println!("g_M = {g}");
    println!("p_M = {}", bases_polynomial(&m)?);
    println!("f_M = {}", bivariate_restriction(&m)?);

    let j = ElementSet::from_elements([3]);
    let mut alpha = vec![0u32; g.nvars()];
    for e in j.iter() {
        alpha[e] = 1;
    }
    let derivative = g.derivative_multi(&alpha)?;
    let contracted = independence_polynomial(&m.contract(j)?)?;
    println!("d/dz3 g_M = {derivative}");
    println!("g_(M/3)   = {contracted}");
    println!("equal: {}", derivative == contracted);

    println!("JSON: {}", serde_json::to_string(&g)?);
    Ok(())
}
