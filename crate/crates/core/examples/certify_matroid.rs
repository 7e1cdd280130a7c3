//! The matroid-specialised certifier and its contraction matrices.

use mason_clc::logconcavity::CheckKind;
use mason_clc::{certify_clc_matroid, matroid_quadratic_matrix, ElementSet, Matroid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let cert = certify_clc_matroid(&k4)?;
    let quadratics: Vec<_> = cert.checks.iter().filter(|c| c.kind == CheckKind::QuadraticNsd).collect();
    println!("K4: {:?}, {} checks, {} quadratic", cert.verdict, cert.checks.len(), quadratics.len());

    for j in [vec![1, 2], vec![1, 6], vec![3]] {
        let c = k4.contract(ElementSet::from_elements(j.iter().copied()))?;
        println!("K4 / {j:?}: non-loops {}, matrix {:?}", c.parallel_partition()?.non_loops(), matroid_quadratic_matrix(&c)?);
    }

    for m in [Matroid::uniform(2, 3)?, Matroid::uniform(1, 2)?, Matroid::uniform(3, 6)?] {
        let cert = certify_clc_matroid(&m)?;
        println!("U({},{}): {:?} with {} checks", m.rank(), m.size(), cert.verdict, cert.checks.len());
    }
    Ok(())
}
