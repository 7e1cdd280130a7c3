//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use mason_clc::polynomial::{rational, SparsePolynomial};
use mason_clc::{ElementSet, Matroid, SymmetricMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Σ_I y^{size−|I|} Π_{i∈I} z_i` built by multiplying variables.
pub fn product_form_polynomial(nvars: usize, size: usize, sets: &[ElementSet]) -> SparsePolynomial {
    let y = SparsePolynomial::variable(nvars, 0);
    let mut total = SparsePolynomial::zero(nvars);
    for s in sets {
        let mut term = y.pow((size - s.len()) as u32);
        for i in s.iter() {
            term = &term * &SparsePolynomial::variable(nvars, i);
        }
        total = &total + &term;
    }
    total
}

/// Largest `|I ∩ X|` over the listed independent sets.
pub fn brute_rank(sets: &[ElementSet], x: ElementSet) -> usize {
    sets.iter().filter(|s| s.is_subset(x)).map(|s| s.len()).max().unwrap_or(0)
}

/// Independent sets of `M/J` read off from the independent sets of `M`.
pub fn contraction_oracle(sets: &[ElementSet], j: ElementSet) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = sets
        .iter()
        .filter(|s| j.is_subset(**s))
        .map(|s| s.difference(j))
        .collect();
    out.sort_by(ElementSet::canonical_cmp);
    out
}

/// Columns indexed by `subset` are dependent over GF(p) iff some nonzero
/// coefficient vector combines them to zero. Exhaustive search.
pub fn gf_p_independent(columns: &[Vec<u64>], p: u64, subset: &[usize]) -> bool {
    let k = subset.len();
    let rows = columns.first().map_or(0, Vec::len);
    let total = p.pow(k as u32);
    for code in 1..total {
        let mut c = code;
        let coeffs: Vec<u64> = (0..k)
            .map(|_| {
                let d = c % p;
                c /= p;
                d
            })
            .collect();
        let zero = (0..rows).all(|r| {
            subset
                .iter()
                .zip(&coeffs)
                .map(|(&col, &a)| a * columns[col][r])
                .sum::<u64>()
                % p
                == 0
        });
        if zero {
            return false;
        }
    }
    true
}

/// Rank by Gaussian elimination over the rationals.
pub fn rational_rank(columns: &[Vec<BigRational>]) -> usize {
    if columns.is_empty() {
        return 0;
    }
    let rows = columns[0].len();
    let mut m: Vec<Vec<BigRational>> = (0..rows).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let cols = columns.len();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &m[rank][col];
                for c in col..cols {
                    let sub = &factor * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// An edge multiset is a forest iff it has `Σ_components (|V_c| − 1)` edges
/// and no self-loops.
pub fn is_forest_oracle(vertices: usize, edges: &[(usize, usize)]) -> bool {
    if edges.iter().any(|(a, b)| a == b) {
        return false;
    }
    let mut seen = vec![false; vertices];
    let mut forest_edges = 0;
    for start in 0..vertices {
        if seen[start] {
            continue;
        }
        let mut size = 0;
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(v) = queue.pop_front() {
            size += 1;
            for &(a, b) in edges {
                for (x, y) in [(a, b), (b, a)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        forest_edges += size - 1;
    }
    edges.len() == forest_edges
}

pub fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= a[col][col].clone();
        for r in col + 1..n {
            let factor = &a[r][col] / &a[col][col];
            for c in col..n {
                let sub = &factor * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// `Q` is negative semidefinite iff every principal minor of `−Q` is ≥ 0.
pub fn nsd_by_principal_minors(q: &SymmetricMatrix) -> bool {
    let n = q.dim();
    let neg = q.neg();
    (1u32..(1 << n)).all(|mask| {
        let idx: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        !determinant(&neg.principal_submatrix(&idx).rows()).is_negative()
    })
}

pub fn random_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> BigRational {
    BigRational::new(
        BigInt::from(rng.random_range(-max_num..=max_num)),
        BigInt::from(rng.random_range(1..=max_den)),
    )
}

pub fn random_positive(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|_| BigRational::new(BigInt::from(rng.random_range(1..=20)), BigInt::from(rng.random_range(1..=6))))
        .collect()
}

pub fn random_nonnegative(rng: &mut ChaCha8Rng, n: usize) -> Vec<BigRational> {
    (0..n)
        .map(|_| {
            if rng.random_bool(0.2) {
                BigRational::zero()
            } else {
                BigRational::new(BigInt::from(rng.random_range(1..=20)), BigInt::from(rng.random_range(1..=6)))
            }
        })
        .collect()
}

pub fn random_symmetric(rng: &mut ChaCha8Rng, dim: usize) -> SymmetricMatrix {
    let mut q = SymmetricMatrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            q.set(i, j, random_rational(rng, 9, 4));
        }
    }
    q
}

/// `−BᵀB` for a random `k × dim` integer `B`; negative semidefinite, singular when `k < dim`.
pub fn random_nsd(rng: &mut ChaCha8Rng, dim: usize, k: usize) -> SymmetricMatrix {
    let b: Vec<Vec<BigRational>> = (0..k)
        .map(|_| (0..dim).map(|_| rational(rng.random_range(-3..=3))).collect())
        .collect();
    let mut q = SymmetricMatrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            let s: BigRational = b.iter().map(|row| &row[i] * &row[j]).sum();
            q.set(i, j, -s);
        }
    }
    q
}

fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .flat_map(|first| {
            monomials(n - 1, d - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Random homogeneous polynomial with nonnegative integer coefficients.
pub fn random_homogeneous(rng: &mut ChaCha8Rng, n: usize, d: u32) -> SparsePolynomial {
    let all = monomials(n, d);
    loop {
        let density = rng.random_range(0.1..0.9);
        let terms: Vec<(Vec<u32>, BigRational)> = all
            .iter()
            .filter_map(|e| rng.random_bool(density).then(|| (e.clone(), rational(rng.random_range(1..=6)))))
            .collect();
        let f = SparsePolynomial::from_terms(n, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// Product of `d` random linear forms with nonnegative coefficients, which is log-concave.
pub fn random_linear_product(rng: &mut ChaCha8Rng, n: usize, d: u32) -> SparsePolynomial {
    let mut f = SparsePolynomial::constant(n, BigRational::one());
    for _ in 0..d {
        let form = loop {
            let terms: Vec<(Vec<u32>, BigRational)> = (0..n)
                .filter_map(|i| {
                    rng.random_bool(0.7).then(|| {
                        let mut e = vec![0u32; n];
                        e[i] = 1;
                        (e, rational(rng.random_range(1..=4)))
                    })
                })
                .collect();
            let form = SparsePolynomial::from_terms(n, terms).unwrap();
            if !form.is_zero() {
                break form;
            }
        };
        f = &f * &form;
    }
    f
}

/// A random small matroid from one of the constructors.
pub fn random_matroid(rng: &mut ChaCha8Rng, max_elements: usize) -> Matroid {
    let n = rng.random_range(1..=max_elements);
    match rng.random_range(0..4) {
        0 => Matroid::uniform(rng.random_range(0..=n as i64), n).unwrap(),
        1 => {
            let vertices = rng.random_range(1..=5);
            let edges: Vec<(usize, usize)> = (0..n)
                .map(|_| (rng.random_range(0..vertices), rng.random_range(0..vertices)))
                .collect();
            Matroid::graphic(vertices, &edges).unwrap()
        }
        2 => {
            let p = if rng.random_bool(0.5) { 2 } else { 3 };
            let rows = rng.random_range(1..=4);
            let cols: Vec<Vec<BigInt>> = (0..n)
                .map(|_| (0..rows).map(|_| BigInt::from(rng.random_range(0..p))).collect())
                .collect();
            Matroid::linear(p, &cols).unwrap()
        }
        _ => {
            let rows = rng.random_range(1..=4);
            let cols: Vec<Vec<BigInt>> = (0..n)
                .map(|_| (0..rows).map(|_| BigInt::from(rng.random_range(-2..=2))).collect())
                .collect();
            Matroid::linear(0, &cols).unwrap()
        }
    }
}
