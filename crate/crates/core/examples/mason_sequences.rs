//! Ultra-log-concavity of independent-set counts, three ways.

use mason_clc::polynomial::bivariate_restriction;
use mason_clc::{check_ultra_log_concave, gurvits_minor_checks, mason_report, Matroid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (seq, n) in [(vec![1, 3, 3, 0], 3), (vec![1, 3, 2, 0], 3), (vec![1, 4, 6, 4, 1], 4), (vec![1, 1, 5], 2)] {
        let r = check_ultra_log_concave(&seq, n)?;
        println!("{seq:?}: log-concave {} strong {} ultra {}", r.log_concave, r.strong, r.ultra);
        for k in &r.records {
            println!("  k={} ultra: {} >= {} {}", k.k, k.ultra.lhs, k.ultra.rhs, if k.ultra.vacuous { "(vacuous)" } else { "" });
        }
    }

    let pair_plus_one = Matroid::from_independence_family(3, [vec![], vec![1], vec![2], vec![3], vec![1, 3], vec![2, 3]])?;
    let f = bivariate_restriction(&pair_plus_one)?;
    println!("f = {f}");
    for g in gurvits_minor_checks(&f)? {
        println!("  k={} hessian {:?} det {}", g.k, g.hessian, g.determinant);
    }

    let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])?;
    let report = mason_report(&k4)?;
    println!(
        "K4: counts {:?}, ultra log-concave {}, certificate {:?}, consistent {}",
        report.sequence.sequence, report.sequence.ultra, report.certificate.verdict, report.consistent
    );
    Ok(())
}
