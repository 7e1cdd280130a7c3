use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AxiomViolation, MatroidError};
use crate::element_set::ElementSet;

/// Ground sets up to this size get an exhaustive exchange check.
pub const EXHAUSTIVE_AXIOM_LIMIT: usize = 16;

/// Pair samples drawn for the exchange check above [`EXHAUSTIVE_AXIOM_LIMIT`].
pub const EXCHANGE_SAMPLES: usize = 200_000;

const EXCHANGE_SAMPLE_SEED: u64 = 0x6d61_736f_6e00_0001;

/// An explicit independence family: a membership table over all subsets of
/// the label space plus the members grouped by size.
#[derive(Clone, Debug)]
pub(crate) struct Family {
    ground: ElementSet,
    table: Vec<u64>,
    by_size: Vec<Vec<ElementSet>>,
}

impl Family {
    /// Deduplicates and indexes `sets`. Every set must already lie inside `ground`.
    pub(crate) fn new(ground: ElementSet, sets: impl IntoIterator<Item = ElementSet>) -> Self {
        let words = (1usize << ground.max_element()).div_ceil(64);
        let mut table = vec![0u64; words];
        let mut by_size = vec![Vec::new(); ground.len() + 1];
        for s in sets {
            debug_assert!(s.is_subset(ground));
            let b = s.bits() as usize;
            if table[b / 64] & (1 << (b % 64)) == 0 {
                table[b / 64] |= 1 << (b % 64);
                by_size[s.len()].push(s);
            }
        }
        for level in &mut by_size {
            level.sort_by(ElementSet::canonical_cmp);
        }
        Family {
            ground,
            table,
            by_size,
        }
    }

    pub(crate) fn contains(&self, s: ElementSet) -> bool {
        let b = s.bits() as usize;
        b / 64 < self.table.len() && self.table[b / 64] & (1 << (b % 64)) != 0
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.by_size.iter().all(Vec::is_empty)
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.by_size.iter().flatten().copied()
    }

    pub(crate) fn max_size(&self) -> usize {
        self.by_size.iter().rposition(|l| !l.is_empty()).unwrap_or(0)
    }

    /// Checks downward closure and the exchange axiom.
    pub(crate) fn validate(&self) -> Result<(), MatroidError> {
        if self.is_empty() {
            return Err(MatroidError::EmptyFamily);
        }
        self.check_downward_closed()?;
        if self.ground.len() <= EXHAUSTIVE_AXIOM_LIMIT {
            self.check_exchange_exhaustive()
        } else {
            self.check_exchange_sampled()
        }
    }

    // Removing one element at a time is enough: closure under single-element
    // deletion gives closure under all subsets by induction.
    fn check_downward_closed(&self) -> Result<(), MatroidError> {
        for t in self.iter() {
            for e in t.iter() {
                let s = t.without(e);
                if !self.contains(s) {
                    return Err(AxiomViolation::DownwardClosure {
                        subset: s,
                        superset: t,
                    }
                    .into());
                }
            }
        }
        Ok(())
    }

    /// Builds the largest-member-inside function over every subset of the
    /// ground set and checks local submodularity
    /// `r(X+x) + r(X+y) >= r(X+x+y) + r(X)`, which together with unit increase
    /// is equivalent to the exchange axiom for a downward-closed family.
    fn check_exchange_exhaustive(&self) -> Result<(), MatroidError> {
        let positions: Vec<usize> = self.ground.iter().collect();
        let m = positions.len();
        let expand = |compact: u32| -> ElementSet {
            let mut bits = 0u32;
            let mut rest = compact;
            while rest != 0 {
                let p = rest.trailing_zeros() as usize;
                bits |= 1 << (positions[p] - 1);
                rest &= rest - 1;
            }
            ElementSet::from_bits(bits)
        };

        let size = 1usize << m;
        let mut rank = vec![0u8; size];
        // best[X] is a largest member inside X, in compact coordinates.
        let mut best = vec![0u32; size];
        for x in 1..size as u32 {
            if self.contains(expand(x)) {
                rank[x as usize] = x.count_ones() as u8;
                best[x as usize] = x;
                continue;
            }
            let mut rest = x;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                let sub = (x ^ bit) as usize;
                if rank[sub] > rank[x as usize] {
                    rank[x as usize] = rank[sub];
                    best[x as usize] = best[sub];
                }
                rest ^= bit;
            }
        }

        for x in 0..size as u32 {
            let r = rank[x as usize];
            for i in 0..m {
                let xi = 1u32 << i;
                if x & xi != 0 {
                    continue;
                }
                let ri = rank[(x | xi) as usize];
                if ri != r {
                    continue;
                }
                for j in (i + 1)..m {
                    let xj = 1u32 << j;
                    if x & xj != 0 {
                        continue;
                    }
                    let rj = rank[(x | xj) as usize];
                    let rij = rank[(x | xi | xj) as usize];
                    if ri + rj < rij + r {
                        let small = expand(best[x as usize]);
                        let large = expand(best[(x | xi | xj) as usize]);
                        debug_assert!(self.exchange_fails(small, large));
                        return Err(AxiomViolation::Exchange { small, large }.into());
                    }
                }
            }
        }
        Ok(())
    }

    fn check_exchange_sampled(&self) -> Result<(), MatroidError> {
        let mut rng = ChaCha8Rng::seed_from_u64(EXCHANGE_SAMPLE_SEED);
        let levels: Vec<usize> = (0..self.by_size.len().saturating_sub(1))
            .filter(|&k| !self.by_size[k].is_empty() && !self.by_size[k + 1].is_empty())
            .collect();
        if levels.is_empty() {
            return Ok(());
        }
        for _ in 0..EXCHANGE_SAMPLES {
            let k = levels[rng.random_range(0..levels.len())];
            let small = self.by_size[k][rng.random_range(0..self.by_size[k].len())];
            let large = self.by_size[k + 1][rng.random_range(0..self.by_size[k + 1].len())];
            if self.exchange_fails(small, large) {
                return Err(AxiomViolation::Exchange { small, large }.into());
            }
        }
        Ok(())
    }

    fn exchange_fails(&self, small: ElementSet, large: ElementSet) -> bool {
        large.len() > small.len()
            && large
                .difference(small)
                .iter()
                .all(|i| !self.contains(small.with(i)))
    }
}
