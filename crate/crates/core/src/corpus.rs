//! Seeded test corpus of matroids and the verification sweep run over it.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::element_set::ElementSet;
use crate::logconcavity::spectral_nd_report;
use crate::mason::{mason_report, MasonError};
use crate::matroid::{Matroid, MatroidError, MatroidSpec};
use crate::polynomial::independence_polynomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusConfig {
    pub graphic_max_vertices: usize,
    pub uniform_max_n: usize,
    pub linear_count: usize,
    pub linear_max_rows: usize,
    pub linear_max_columns: usize,
    pub explicit_count: usize,
    pub explicit_max_elements: usize,
    pub seed: u64,
}

impl Default for CorpusConfig {
    fn default() -> Self {
        CorpusConfig {
            graphic_max_vertices: 5,
            uniform_max_n: 12,
            linear_count: 500,
            linear_max_rows: 4,
            linear_max_columns: 10,
            explicit_count: 200,
            explicit_max_elements: 8,
            seed: 7,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Graphic,
    Uniform,
    Linear,
    Explicit,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: String,
    pub family: Family,
    pub spec: MatroidSpec,
    pub matroid: Matroid,
}

/// Edges of `K_v` in lexicographic order.
fn complete_edges(v: usize) -> Vec<(usize, usize)> {
    (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect()
}

fn permutations(v: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..v).collect();
    fn heap(k: usize, perm: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(perm.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, perm, out);
            let j = if k % 2 == 0 { i } else { 0 };
            perm.swap(j, k - 1);
        }
    }
    heap(v, &mut perm, &mut out);
    out
}

fn connected(v: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; v];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &(a, b) in edges {
            let other = if a == x { b } else if b == x { a } else { continue };
            if !seen[other] {
                seen[other] = true;
                stack.push(other);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// One representative per isomorphism class of connected simple graphs on
/// `vertices` vertices: the edge mask that is smallest over all relabellings.
pub fn connected_graphs(vertices: usize) -> Vec<Vec<(usize, usize)>> {
    let all = complete_edges(vertices);
    let index = |i: usize, j: usize| all.iter().position(|&e| e == (i.min(j), i.max(j))).unwrap();
    let perms = permutations(vertices);
    let relabel: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| all.iter().map(|&(i, j)| index(p[i], p[j])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << all.len()) {
        let edges: Vec<(usize, usize)> = (0..all.len()).filter(|&b| mask >> b & 1 == 1).map(|b| all[b]).collect();
        if !connected(vertices, &edges) {
            continue;
        }
        let canonical = relabel
            .iter()
            .map(|map| (0..all.len()).filter(|&b| mask >> b & 1 == 1).fold(0u32, |acc, b| acc | 1 << map[b]))
            .min()
            .unwrap();
        if canonical == mask {
            out.push(edges);
        }
    }
    out
}

fn random_linear(rng: &mut ChaCha8Rng, modulus: u64, rows: usize, cols: usize) -> Vec<Vec<BigInt>> {
    (0..cols)
        .map(|_| (0..rows).map(|_| BigInt::from(rng.random_range(0..modulus))).collect())
        .collect()
}

/// Every `r`-subset except the given circuit-hyperplanes is a basis.
fn sparse_paving(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Vec<ElementSet> {
    let mut candidates: Vec<ElementSet> = ElementSet::full(n).subsets().filter(|s| s.len() == r).collect();
    candidates.sort_by(ElementSet::canonical_cmp);
    candidates.shuffle(rng);
    let wanted = rng.random_range(0..=candidates.len().min(6));
    let mut chosen: Vec<ElementSet> = Vec::new();
    for c in candidates {
        if chosen.len() == wanted {
            break;
        }
        if chosen.iter().all(|h| h.intersection(c).len() + 2 <= r) {
            chosen.push(c);
        }
    }
    ElementSet::full(n)
        .subsets()
        .filter(|s| s.len() < r || (s.len() == r && !chosen.contains(s)))
        .collect()
}

fn truncate(m: &Matroid, rank: usize) -> Result<Vec<ElementSet>, MatroidError> {
    Ok(m.independent_sets()?.iter().copied().filter(|s| s.len() <= rank).collect())
}

fn vamos() -> Vec<ElementSet> {
    let pairs = [[1, 2], [3, 4], [5, 6], [7, 8]];
    let excluded: Vec<ElementSet> = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]
        .iter()
        .map(|&(a, b)| ElementSet::from_elements(pairs[a].into_iter().chain(pairs[b])))
        .collect();
    ElementSet::full(8)
        .subsets()
        .filter(|s| s.len() < 4 || (s.len() == 4 && !excluded.contains(s)))
        .collect()
}

fn explicit_family(rng: &mut ChaCha8Rng, index: usize, max_elements: usize) -> Result<(usize, Vec<ElementSet>), MatroidError> {
    if index == 0 && max_elements >= 8 {
        return Ok((8, vamos()));
    }
    let n = rng.random_range(2..=max_elements.max(2));
    match index % 3 {
        0 => {
            let r = rng.random_range(1..=n.min(4));
            Ok((n, sparse_paving(rng, n, r)))
        }
        1 => {
            let modulus = if rng.random_bool(0.5) { 2 } else { 3 };
            let rows = rng.random_range(1..=4);
            let m = Matroid::linear(modulus, &random_linear(rng, modulus, rows, n))?;
            let rank = rng.random_range(0..=m.rank());
            Ok((n, truncate(&m, rank)?))
        }
        _ => {
            let vertices = rng.random_range(2..=5);
            let edges: Vec<(usize, usize)> = (0..n)
                .map(|_| (rng.random_range(0..vertices), rng.random_range(0..vertices)))
                .collect();
            let m = Matroid::graphic(vertices, &edges)?;
            let rank = rng.random_range(0..=m.rank());
            Ok((n, truncate(&m, rank)?))
        }
    }
}

fn family_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn generate_corpus(config: &CorpusConfig) -> Result<Vec<CorpusEntry>, MatroidError> {
    let mut specs: Vec<(String, Family, MatroidSpec)> = Vec::new();

    let mut count = 0;
    for v in 1..=config.graphic_max_vertices {
        for edges in connected_graphs(v) {
            count += 1;
            specs.push((
                format!("graphic-{count:04}"),
                Family::Graphic,
                MatroidSpec::Graphic { vertices: v, edges },
            ));
        }
    }

    count = 0;
    for n in 1..=config.uniform_max_n {
        for r in 0..=n {
            count += 1;
            specs.push((
                format!("uniform-{count:04}"),
                Family::Uniform,
                MatroidSpec::Uniform { r: r as i64, n },
            ));
        }
    }

    let mut rng = family_rng(config.seed, 1);
    for i in 0..config.linear_count {
        let modulus = if i % 2 == 0 { 2 } else { 3 };
        let rows = rng.random_range(1..=config.linear_max_rows);
        let cols = rng.random_range(1..=config.linear_max_columns);
        let columns = random_linear(&mut rng, modulus, rows, cols)
            .into_iter()
            .map(|c| c.iter().map(ToString::to_string).collect())
            .collect();
        specs.push((
            format!("linear-{:04}", i + 1),
            Family::Linear,
            MatroidSpec::Linear { modulus, columns },
        ));
    }

    let mut rng = family_rng(config.seed, 2);
    for i in 0..config.explicit_count {
        let (n, sets) = explicit_family(&mut rng, i, config.explicit_max_elements)?;
        specs.push((
            format!("explicit-{:04}", i + 1),
            Family::Explicit,
            MatroidSpec::Explicit {
                n,
                sets: sets.into_iter().map(ElementSet::to_vec).collect(),
            },
        ));
    }

    specs
        .into_par_iter()
        .map(|(id, family, spec)| {
            let matroid = spec.build()?;
            Ok(CorpusEntry { id, family, spec, matroid })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub id: String,
    pub family: Family,
    pub n: usize,
    pub rank: usize,
    pub sequence: Vec<u64>,
    pub ultra_log_concave: bool,
    pub certificate_accepted: bool,
    pub checks: usize,
    pub gurvits_nonpositive: bool,
    pub consistent: bool,
    pub max_log_hessian_eigenvalue: f64,
}

impl SweepRecord {
    pub fn passed(&self, tolerance: f64) -> bool {
        self.ultra_log_concave
            && self.certificate_accepted
            && self.gurvits_nonpositive
            && self.consistent
            && self.max_log_hessian_eigenvalue <= tolerance
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("{id}: {source}")]
    Mason { id: String, source: MasonError },
    #[error("{id}: {source}")]
    Spectral {
        id: String,
        source: crate::logconcavity::LogConcavityError,
    },
}

pub fn sweep_entry(entry: &CorpusEntry) -> Result<SweepRecord, SweepError> {
    let m = &entry.matroid;
    let mason_err = |source| SweepError::Mason {
        id: entry.id.clone(),
        source,
    };
    let report = mason_report(m).map_err(mason_err)?;
    let g = independence_polynomial(m).map_err(|e| mason_err(e.into()))?;
    let ones = vec![BigRational::from_integer(1.into()); g.nvars()];
    let spectral = spectral_nd_report(&g, &ones, 1e-9).map_err(|source| SweepError::Spectral {
        id: entry.id.clone(),
        source,
    })?;
    Ok(SweepRecord {
        id: entry.id.clone(),
        family: entry.family,
        n: m.size(),
        rank: m.rank(),
        ultra_log_concave: report.sequence.ultra,
        certificate_accepted: report.certificate.is_accepted(),
        checks: report.certificate.checks.len(),
        gurvits_nonpositive: report.gurvits.iter().all(|g| g.nonpositive),
        consistent: report.consistent,
        sequence: report.sequence.sequence,
        max_log_hessian_eigenvalue: spectral.max_eigenvalue,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub config: CorpusConfig,
    pub total: usize,
    pub graphic: usize,
    pub uniform: usize,
    pub linear: usize,
    pub explicit: usize,
    pub failures: Vec<String>,
    pub records: Vec<SweepRecord>,
}

/// Runs the sweep in parallel; records come back sorted by id.
pub fn sweep(entries: &[CorpusEntry], config: &CorpusConfig, tolerance: f64) -> Result<CorpusSummary, SweepError> {
    let mut records: Vec<SweepRecord> = entries.par_iter().map(sweep_entry).collect::<Result<_, _>>()?;
    records.sort_by(|a, b| a.id.cmp(&b.id));
    let count = |f: Family| records.iter().filter(|r| r.family == f).count();
    Ok(CorpusSummary {
        config: config.clone(),
        total: records.len(),
        graphic: count(Family::Graphic),
        uniform: count(Family::Uniform),
        linear: count(Family::Linear),
        explicit: count(Family::Explicit),
        failures: records.iter().filter(|r| !r.passed(tolerance)).map(|r| r.id.clone()).collect(),
        records,
    })
}
