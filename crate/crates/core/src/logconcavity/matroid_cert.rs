use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::certificate::{CheckKind, CheckRecord, ClcCertificate, Witness};
use super::{is_negative_semidefinite, LogConcavityError};
use crate::element_set::ElementSet;
use crate::matrix::SymmetricMatrix;
use crate::matroid::Matroid;
use crate::polynomial::Y;

/// `𝟙𝟙ᵀ − n Σ_P 𝟙_P 𝟙_Pᵀ` over the parallel classes `P`, on the non-loops in
/// increasing label order, where `n` is the ground-set size.
pub fn matroid_quadratic_matrix(m: &Matroid) -> Result<SymmetricMatrix, LogConcavityError> {
    let partition = m.parallel_partition()?;
    let non_loops: Vec<usize> = partition.non_loops().iter().collect();
    if non_loops.is_empty() {
        return Err(LogConcavityError::AllLoops);
    }
    let n = BigRational::from_integer(m.size().into());
    let mut out = SymmetricMatrix::zeros(non_loops.len());
    for (a, &i) in non_loops.iter().enumerate() {
        for (b, &j) in non_loops.iter().enumerate().skip(a) {
            let mut entry = BigRational::one();
            if partition.class_of(i) == partition.class_of(j) {
                entry -= &n;
            }
            out.set(a, b, entry);
        }
    }
    Ok(out)
}

fn alpha_for(nvars: usize, k: usize, j: ElementSet) -> Vec<u32> {
    let mut alpha = vec![0u32; nvars];
    alpha[Y] = k as u32;
    for e in j.iter() {
        alpha[e] = 1;
    }
    alpha
}

/// Checks for one independent set `J`: every `∂_y^k ∂^J g_M = ∂_y^k g_{M/J}`
/// with `k + |J| ≤ n − 2`.
fn checks_for(m: &Matroid, j: ElementSet, nvars: usize) -> Result<Vec<CheckRecord>, LogConcavityError> {
    let c = m.contract(j)?;
    let size = c.size();
    let non_loops: Vec<usize> = c
        .ground()
        .iter()
        .filter(|&e| c.is_independent(ElementSet::singleton(e)).unwrap_or(false))
        .collect();
    let mut out = Vec::with_capacity(size - 1);
    for k in 0..=size - 2 {
        let alpha = alpha_for(nvars, k, j);
        // y^{size-k} is present, and each non-loop z_i appears in y^{size-k-1} z_i,
        // so the mixed-partial graph is a star centred at y.
        let y_power = size - k - 1;
        let star = y_power >= 1;
        out.push(CheckRecord {
            alpha: alpha.clone(),
            kind: CheckKind::Indecomposable,
            passed: star || non_loops.is_empty(),
            witness: (!star && !non_loops.is_empty()).then(|| Witness::Partition {
                left: vec![Y],
                right: non_loops.clone(),
            }),
            matrix: None,
            support: None,
        });
        if k + 2 == size {
            out.push(quadratic_check(&c, alpha, &non_loops, nvars)?);
        }
    }
    Ok(out)
}

fn quadratic_check(
    c: &Matroid,
    alpha: Vec<u32>,
    non_loops: &[usize],
    nvars: usize,
) -> Result<CheckRecord, LogConcavityError> {
    if non_loops.is_empty() {
        // the quadratic is a multiple of y^2
        return Ok(CheckRecord {
            alpha,
            kind: CheckKind::QuadraticNsd,
            passed: true,
            witness: None,
            matrix: Some(SymmetricMatrix::zeros(0)),
            support: Some(Vec::new()),
        });
    }
    let matrix = matroid_quadratic_matrix(c)?;
    let verdict = is_negative_semidefinite(&matrix);
    let witness = verdict.witness().map(|v| {
        let mut point = vec![BigRational::zero(); nvars];
        point[Y] = BigRational::one();
        let mut vector = vec![BigRational::zero(); nvars];
        for (x, &e) in v.iter().zip(non_loops) {
            vector[e] = x.clone();
        }
        Witness::PositiveDirection { point, vector }
    });
    Ok(CheckRecord {
        alpha,
        kind: CheckKind::QuadraticNsd,
        passed: verdict.is_nsd(),
        witness,
        matrix: Some(matrix),
        support: Some(non_loops.to_vec()),
    })
}

/// Complete log-concavity certificate for the independence polynomial
/// `g_M`, using `∂^J g_M = g_{M/J}` to replace every derivative by a
/// contraction.
pub fn certify_clc_matroid(m: &Matroid) -> Result<ClcCertificate, LogConcavityError> {
    let n = m.size();
    let nvars = m.label_count() + 1;
    if n < 2 {
        m.independent_sets()?;
        return Ok(ClcCertificate::from_checks(Vec::new()));
    }
    let sets: Vec<ElementSet> = m
        .independent_sets()?
        .iter()
        .copied()
        .filter(|s| s.len() + 2 <= n)
        .collect();
    let records: Vec<Vec<CheckRecord>> = sets
        .par_iter()
        .map(|&j| checks_for(m, j, nvars))
        .collect::<Result<_, _>>()?;
    Ok(ClcCertificate::from_checks(records.into_iter().flatten().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_matrix_examples() {
        let pair_plus_one = Matroid::from_independence_family(3, [vec![], vec![1], vec![2], vec![3], vec![1, 3], vec![2, 3]])
            .unwrap();
        assert_eq!(
            matroid_quadratic_matrix(&pair_plus_one).unwrap(),
            SymmetricMatrix::from_int_rows(&[&[-2, -2, 1], &[-2, -2, 1], &[1, 1, -2]]).unwrap()
        );
        assert_eq!(
            matroid_quadratic_matrix(&Matroid::uniform(1, 2).unwrap()).unwrap(),
            SymmetricMatrix::from_int_rows(&[&[-1, -1], &[-1, -1]]).unwrap()
        );
        assert_eq!(
            matroid_quadratic_matrix(&Matroid::uniform(2, 2).unwrap()).unwrap(),
            SymmetricMatrix::from_int_rows(&[&[-1, 1], &[1, -1]]).unwrap()
        );
        assert_eq!(
            matroid_quadratic_matrix(&Matroid::uniform(0, 2).unwrap()).unwrap_err(),
            LogConcavityError::AllLoops
        );
    }

    #[test]
    fn uniform_two_three() {
        let cert = certify_clc_matroid(&Matroid::uniform(2, 3).unwrap()).unwrap();
        assert!(cert.is_accepted());
        let quad: Vec<_> = cert.checks.iter().filter(|c| c.kind == CheckKind::QuadraticNsd).collect();
        assert_eq!(quad.len(), 4);
        assert_eq!(cert.checks.len(), 4 + 4 + 1);
    }

    #[test]
    fn small_and_loopy_matroids() {
        assert!(certify_clc_matroid(&Matroid::uniform(1, 2).unwrap()).unwrap().is_accepted());
        assert!(certify_clc_matroid(&Matroid::uniform(0, 3).unwrap()).unwrap().is_accepted());
        let single = certify_clc_matroid(&Matroid::uniform(0, 1).unwrap()).unwrap();
        assert!(single.is_accepted() && single.checks.is_empty());
        let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(certify_clc_matroid(&k4).unwrap().is_accepted());
    }

    #[test]
    fn k4_contraction_matrix_by_hand() {
        // contracting edges 1 = {0,1} and 2 = {0,2} of K4 merges vertices 0,1,2,
        // leaving edges 3, 5, 6 parallel to each other and edge 4 = {1,2} a loop.
        let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let c = k4.contract(ElementSet::from_elements([1, 2])).unwrap();
        assert_eq!(
            matroid_quadratic_matrix(&c).unwrap(),
            SymmetricMatrix::from_int_rows(&[&[-3, -3, -3], &[-3, -3, -3], &[-3, -3, -3]]).unwrap()
        );
    }
}
