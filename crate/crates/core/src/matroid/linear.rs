use num_bigint::BigInt;
use num_traits::Zero;

use crate::element_set::ElementSet;

/// Column vectors over GF(p) or over the rationals (integer entries).
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum LinearRepr {
    Prime { modulus: u64, columns: Vec<Vec<u64>> },
    Rational { columns: Vec<Vec<BigInt>> },
}

impl LinearRepr {
    pub(crate) fn rows(&self) -> usize {
        match self {
            LinearRepr::Prime { columns, .. } => columns.first().map_or(0, Vec::len),
            LinearRepr::Rational { columns } => columns.first().map_or(0, Vec::len),
        }
    }

    pub(crate) fn columns_independent(&self, set: ElementSet) -> bool {
        if set.len() > self.rows() {
            return false;
        }
        match self {
            LinearRepr::Prime { modulus, columns } => {
                let picked: Vec<Vec<u64>> = set.iter().map(|e| columns[e - 1].clone()).collect();
                rank_mod_p(picked, *modulus) == set.len()
            }
            LinearRepr::Rational { columns } => {
                let picked: Vec<Vec<BigInt>> = set.iter().map(|e| columns[e - 1].clone()).collect();
                rank_fraction_free(picked) == set.len()
            }
        }
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2).
    let (mut base, mut exp, mut acc) = (a % p, p - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank of a list of vectors over GF(p), by row reduction of the vectors themselves.
pub(crate) fn rank_mod_p(mut vectors: Vec<Vec<u64>>, p: u64) -> usize {
    let dim = vectors.first().map_or(0, Vec::len);
    let mut rank = 0;
    for coord in 0..dim {
        let Some(pivot) = (rank..vectors.len()).find(|&r| vectors[r][coord] != 0) else {
            continue;
        };
        vectors.swap(rank, pivot);
        let inv = inv_mod(vectors[rank][coord], p);
        for r in (rank + 1)..vectors.len() {
            let factor = mul_mod(vectors[r][coord], inv, p);
            if factor == 0 {
                continue;
            }
            for c in coord..dim {
                let sub = mul_mod(factor, vectors[rank][c], p);
                vectors[r][c] = (vectors[r][c] + p - sub) % p;
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of integer vectors over the rationals by Bareiss elimination; every
/// division is exact so entries stay integral.
pub(crate) fn rank_fraction_free(mut vectors: Vec<Vec<BigInt>>) -> usize {
    let dim = vectors.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    for coord in 0..dim {
        let Some(pivot) = (rank..vectors.len()).find(|&r| !vectors[r][coord].is_zero()) else {
            continue;
        };
        vectors.swap(rank, pivot);
        for r in (rank + 1)..vectors.len() {
            for c in (coord + 1)..dim {
                let num = &vectors[rank][coord] * &vectors[r][c] - &vectors[r][coord] * &vectors[rank][c];
                vectors[r][c] = num / &prev;
            }
            vectors[r][coord] = BigInt::zero();
        }
        prev = vectors[rank][coord].clone();
        rank += 1;
    }
    rank
}
