//! Substituting a nonnegative affine map into a polynomial.

use mason_clc::polynomial::{independence_polynomial, rational, AffineMap};
use mason_clc::{log_concave_at, Matroid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)])?;
    let g = independence_polynomial(&k3)?;

    // (y, z) -> (y, z, z, z) recovers the bivariate restriction.
    let diagonal = AffineMap::diagonal_restriction(3);
    let f = g.substitute_affine(&diagonal)?;
    println!("g(y, z, z, z) = {f}");

    // Any nonnegative linear map keeps log-concavity.
    let map = AffineMap::linear(vec![
        vec![rational(1), rational(0)],
        vec![rational(1), rational(2)],
        vec![rational(0), rational(1)],
        vec![rational(3), rational(1)],
    ])?;
    println!("preserves orthant: {}", map.preserves_orthant());
    let h = g.substitute_affine(&map)?;
    println!("substituted: {h}");
    for point in [[1, 1], [1, 5], [7, 2]] {
        let a: Vec<_> = point.iter().map(|&x| rational(x)).collect();
        println!("log-concave at {point:?}: {}", log_concave_at(&h, &a)?.holds);
    }
    Ok(())
}
