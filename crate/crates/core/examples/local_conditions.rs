//! Local log-concavity and the equivalent conditions side by side.

use mason_clc::polynomial::rational;
use mason_clc::{lemma21_report, log_concave_at, SparsePolynomial};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let examples = [
        ("z1 z2", SparsePolynomial::from_int_terms(2, &[(&[1, 1], 1)])?),
        ("z1^2 + z2^2", SparsePolynomial::from_int_terms(2, &[(&[2, 0], 1), (&[0, 2], 1)])?),
        ("(z1 + z2)^2", SparsePolynomial::from_int_terms(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])?),
        ("y^2 z", SparsePolynomial::from_int_terms(2, &[(&[2, 1], 1)])?),
    ];
    let a = vec![rational(1), rational(1)];
    for (name, f) in &examples {
        let local = log_concave_at(f, &a)?;
        let report = lemma21_report(f, &a, 50, 7)?;
        println!("{name}: log-concave at (1,1) = {}", local.holds);
        println!("  matrix {:?}", local.matrix);
        println!(
            "  conditions: log-Hessian {}, on (Qa)^⊥ {}, sampled {} ({} samples), hyperplane {}, rank-one {}, directional {:?}; agree {}",
            report.log_hessian.holds,
            report.complement_of_qa.holds,
            report.sampled_complements.holds,
            report.sampled_complements.samples,
            report.some_hyperplane,
            report.rank_one_correction.holds,
            report.directional,
            report.agree
        );
    }
    Ok(())
}
