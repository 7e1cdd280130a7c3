//! Matroids given by an explicit independence family or by one of the
//! structured constructors (uniform, graphic, linear), plus contraction.
//!
//! Elements are the 1-based labels `1..=n`. Contraction keeps the original
//! labels and shrinks the ground set, so a contraction `M/J` still lives in
//! the label space of `M`; this is what lets `∂^J g_M` and `g_{M/J}` be
//! compared variable by variable.
//!
//! Structured representations answer independence queries directly (a
//! union-find forest test for graphic matroids, exact elimination for linear
//! ones). Anything that enumerates the independence family is bounded by the
//! matroid's enumeration bound, [`DEFAULT_ENUMERATION_BOUND`] unless changed
//! with [`Matroid::with_enumeration_bound`].

mod family;
mod graphic;
mod json;
mod linear;

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use thiserror::Error;

pub use family::{EXCHANGE_SAMPLES, EXHAUSTIVE_AXIOM_LIMIT};
pub use json::MatroidSpec;

use crate::element_set::{ElementSet, MAX_ELEMENTS};
use family::Family;
use graphic::GraphicRepr;
use linear::LinearRepr;

pub const DEFAULT_ENUMERATION_BOUND: usize = 20;
pub const MAX_ENUMERATION_BOUND: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxiomViolation {
    #[error("downward closure: {subset} ⊆ {superset} but {subset} is not independent")]
    DownwardClosure {
        subset: ElementSet,
        superset: ElementSet,
    },
    #[error("exchange: no element of {large} \\ {small} extends {small}")]
    Exchange { small: ElementSet, large: ElementSet },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("axiom violation, {0}")]
    AxiomViolation(#[from] AxiomViolation),
    #[error("the independence family is empty")]
    EmptyFamily,
    #[error("invalid rank {r} for a ground set of size {n}")]
    InvalidRank { r: i64, n: usize },
    #[error("vertex {vertex} out of range for a graph on {vertices} vertices")]
    InvalidVertexIndex { vertex: usize, vertices: usize },
    #[error("modulus {0} is not prime")]
    NonPrimeModulus(u64),
    #[error("element set {set} is not contained in the ground set {ground}")]
    ElementOutOfRange { set: ElementSet, ground: ElementSet },
    #[error("element label {label} outside 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("parallel classes are inconsistent at the pair {i}, {j}")]
    NotAMatroid { i: usize, j: usize },
    #[error("{0} is not independent")]
    NotIndependent(ElementSet),
    #[error("ground set of size {n} exceeds the enumeration bound {bound}")]
    EnumerationLimitExceeded { n: usize, bound: usize },
    #[error("enumeration bound {0} exceeds the maximum {MAX_ENUMERATION_BOUND}")]
    BoundTooLarge(usize),
    #[error("{0} elements exceed the supported maximum of {MAX_ELEMENTS}")]
    TooManyElements(usize),
    #[error("matrix columns have inconsistent lengths")]
    RaggedColumns,
    #[error("cannot parse matrix entry {0:?} as an integer")]
    InvalidEntry(String),
}

/// A validated matroid. Immutable once built.
#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    ground: ElementSet,
    repr: Repr,
    rank: usize,
    enumeration_bound: usize,
    independent: Arc<OnceLock<Vec<ElementSet>>>,
}

#[derive(Clone, Debug)]
enum Repr {
    Explicit(Arc<Family>),
    Uniform { r: usize },
    Graphic(Arc<GraphicRepr>),
    Linear(Arc<LinearRepr>),
    Contraction { base: Arc<Matroid>, by: ElementSet },
}

/// Which constructor a matroid came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatroidKind {
    Explicit,
    Uniform,
    Graphic,
    Linear,
    Contraction,
}

/// Loops and parallel classes of a matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelPartition {
    pub loops: ElementSet,
    /// Classes in order of their smallest element.
    pub classes: Vec<ElementSet>,
}

impl ParallelPartition {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn non_loops(&self) -> ElementSet {
        self.classes.iter().fold(ElementSet::EMPTY, |acc, c| acc | *c)
    }

    /// Index of the class holding `element`, if it is not a loop.
    pub fn class_of(&self, element: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(element))
    }
}

impl Matroid {
    fn build(n: usize, ground: ElementSet, repr: Repr) -> Matroid {
        let mut m = Matroid {
            n,
            ground,
            repr,
            rank: 0,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
            independent: Arc::default(),
        };
        m.rank = m.greedy_rank(ground);
        m
    }

    /// Validates `family` (subsets of `{1..n}`) against the matroid axioms.
    pub fn from_independence_family<I, S>(n: usize, family: I) -> Result<Matroid, MatroidError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        Self::from_independence_family_bounded(n, family, DEFAULT_ENUMERATION_BOUND)
    }

    pub fn from_independence_family_bounded<I, S>(
        n: usize,
        family: I,
        bound: usize,
    ) -> Result<Matroid, MatroidError>
    where
        I: IntoIterator<Item = S>,
        S: IntoIterator<Item = usize>,
    {
        if bound > MAX_ENUMERATION_BOUND {
            return Err(MatroidError::BoundTooLarge(bound));
        }
        if n > bound {
            return Err(MatroidError::EnumerationLimitExceeded { n, bound });
        }
        let mut sets = Vec::new();
        for s in family {
            let mut bits = ElementSet::EMPTY;
            for label in s {
                if !(1..=n).contains(&label) {
                    return Err(MatroidError::LabelOutOfRange { label, n });
                }
                bits = bits.with(label);
            }
            sets.push(bits);
        }
        Self::from_sets(n, ElementSet::full(n), sets).map(|m| Matroid {
            enumeration_bound: bound,
            ..m
        })
    }

    fn from_sets(n: usize, ground: ElementSet, sets: Vec<ElementSet>) -> Result<Matroid, MatroidError> {
        let family = Family::new(ground, sets);
        family.validate()?;
        let rank = family.max_size();
        let mut m = Matroid::build(n, ground, Repr::Explicit(Arc::new(family)));
        debug_assert_eq!(m.rank, rank);
        m.rank = rank;
        Ok(m)
    }

    /// `U(r, n)`: every subset of size at most `r` is independent.
    pub fn uniform(r: i64, n: usize) -> Result<Matroid, MatroidError> {
        if n > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(n));
        }
        if r < 0 || r as usize > n {
            return Err(MatroidError::InvalidRank { r, n });
        }
        Ok(Matroid::build(n, ElementSet::full(n), Repr::Uniform { r: r as usize }))
    }

    /// Cycle matroid of a multigraph on vertices `0..vertices`. Edge `i` of
    /// the list is element `i + 1`; self-loops become matroid loops.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid, MatroidError> {
        if edges.len() > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(edges.len()));
        }
        for &(u, v) in edges {
            for vertex in [u, v] {
                if vertex >= vertices {
                    return Err(MatroidError::InvalidVertexIndex { vertex, vertices });
                }
            }
        }
        let repr = GraphicRepr {
            vertices,
            edges: edges.to_vec(),
        };
        Ok(Matroid::build(
            edges.len(),
            ElementSet::full(edges.len()),
            Repr::Graphic(Arc::new(repr)),
        ))
    }

    /// Column matroid over GF(`modulus`), or over the rationals when `modulus` is 0.
    pub fn linear(modulus: u64, columns: &[Vec<BigInt>]) -> Result<Matroid, MatroidError> {
        let n = columns.len();
        if n > MAX_ELEMENTS {
            return Err(MatroidError::TooManyElements(n));
        }
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(MatroidError::RaggedColumns);
        }
        let repr = if modulus == 0 {
            LinearRepr::Rational {
                columns: columns.to_vec(),
            }
        } else {
            if !linear::is_prime(modulus) {
                return Err(MatroidError::NonPrimeModulus(modulus));
            }
            let p = BigInt::from(modulus);
            let reduced = columns
                .iter()
                .map(|c| {
                    c.iter()
                        .map(|x| u64::try_from(x.mod_floor(&p)).expect("residue fits in u64"))
                        .collect()
                })
                .collect();
            LinearRepr::Prime {
                modulus,
                columns: reduced,
            }
        };
        Ok(Matroid::build(n, ElementSet::full(n), Repr::Linear(Arc::new(repr))))
    }

    /// Same matroid with a different enumeration bound (at most [`MAX_ENUMERATION_BOUND`]).
    pub fn with_enumeration_bound(mut self, bound: usize) -> Result<Matroid, MatroidError> {
        if bound > MAX_ENUMERATION_BOUND {
            return Err(MatroidError::BoundTooLarge(bound));
        }
        self.enumeration_bound = bound;
        Ok(self)
    }

    /// Size of the label space; elements are `1..=n`.
    pub fn label_count(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> ElementSet {
        self.ground
    }

    /// Number of elements in the ground set.
    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn enumeration_bound(&self) -> usize {
        self.enumeration_bound
    }

    pub fn kind(&self) -> MatroidKind {
        match self.repr {
            Repr::Explicit(_) => MatroidKind::Explicit,
            Repr::Uniform { .. } => MatroidKind::Uniform,
            Repr::Graphic(_) => MatroidKind::Graphic,
            Repr::Linear(_) => MatroidKind::Linear,
            Repr::Contraction { .. } => MatroidKind::Contraction,
        }
    }

    fn check_in_ground(&self, set: ElementSet) -> Result<(), MatroidError> {
        if set.is_subset(self.ground) {
            Ok(())
        } else {
            Err(MatroidError::ElementOutOfRange {
                set,
                ground: self.ground,
            })
        }
    }

    pub fn is_independent(&self, set: ElementSet) -> Result<bool, MatroidError> {
        self.check_in_ground(set)?;
        Ok(self.independent_unchecked(set))
    }

    fn independent_unchecked(&self, set: ElementSet) -> bool {
        match &self.repr {
            Repr::Explicit(family) => family.contains(set),
            Repr::Uniform { r } => set.len() <= *r,
            Repr::Graphic(g) => g.is_forest(set),
            Repr::Linear(l) => l.columns_independent(set),
            Repr::Contraction { base, by } => base.independent_unchecked(set | *by),
        }
    }

    fn greedy_rank(&self, set: ElementSet) -> usize {
        let mut chosen = ElementSet::EMPTY;
        for e in set.iter() {
            let grown = chosen.with(e);
            if self.independent_unchecked(grown) {
                chosen = grown;
            }
        }
        chosen.len()
    }

    /// Size of a largest independent subset of `set`. Greedy extension is
    /// exact for matroids.
    pub fn rank_of(&self, set: ElementSet) -> Result<usize, MatroidError> {
        self.check_in_ground(set)?;
        Ok(self.greedy_rank(set))
    }

    /// Elements `i` with `{i}` dependent.
    pub fn loops(&self) -> ElementSet {
        self.ground
            .iter()
            .filter(|&e| !self.independent_unchecked(ElementSet::singleton(e)))
            .collect()
    }

    pub fn parallel_partition(&self) -> Result<ParallelPartition, MatroidError> {
        let loops = self.loops();
        let mut classes: Vec<ElementSet> = Vec::new();
        for e in self.ground.difference(loops).iter() {
            let pair_rank = |rep: usize| self.greedy_rank(ElementSet::from_elements([rep, e]));
            match classes.iter_mut().find(|c| pair_rank(c.iter().next().unwrap()) == 1) {
                Some(class) => *class = class.with(e),
                None => classes.push(ElementSet::singleton(e)),
            }
        }
        // Parallelism must be an equivalence relation: same class means rank 1,
        // different classes mean rank 2.
        let partition = ParallelPartition { loops, classes };
        let non_loops: Vec<usize> = self.ground.difference(loops).iter().collect();
        for (idx, &i) in non_loops.iter().enumerate() {
            for &j in &non_loops[idx + 1..] {
                let same = partition.class_of(i) == partition.class_of(j);
                let r = self.greedy_rank(ElementSet::from_elements([i, j]));
                if same != (r == 1) {
                    return Err(MatroidError::NotAMatroid { i, j });
                }
            }
        }
        Ok(partition)
    }

    /// `M/S` for an independent `S`, on ground set `ground \ S` with the same labels.
    pub fn contract(&self, set: ElementSet) -> Result<Matroid, MatroidError> {
        if !self.is_independent(set)? {
            return Err(MatroidError::NotIndependent(set));
        }
        if set.is_empty() {
            return Ok(self.clone());
        }
        let repr = match &self.repr {
            Repr::Contraction { base, by } => Repr::Contraction {
                base: Arc::clone(base),
                by: *by | set,
            },
            _ => Repr::Contraction {
                base: Arc::new(self.clone()),
                by: set,
            },
        };
        Ok(Matroid {
            n: self.n,
            ground: self.ground.difference(set),
            repr,
            rank: self.rank - set.len(),
            enumeration_bound: self.enumeration_bound,
            independent: Arc::default(),
        })
    }

    fn check_enumeration_bound(&self) -> Result<(), MatroidError> {
        if self.size() > self.enumeration_bound {
            Err(MatroidError::EnumerationLimitExceeded {
                n: self.size(),
                bound: self.enumeration_bound,
            })
        } else {
            Ok(())
        }
    }

    /// Every independent set, sorted by size and then lexicographically.
    pub fn independent_sets(&self) -> Result<&[ElementSet], MatroidError> {
        self.check_enumeration_bound()?;
        Ok(self.independent.get_or_init(|| self.enumerate_independent()))
    }

    fn enumerate_independent(&self) -> Vec<ElementSet> {
        if let Repr::Explicit(family) = &self.repr {
            return family.iter().collect();
        }
        // Depth-first extension by larger labels visits each independent set
        // once; downward closure means dependent branches can be pruned.
        let elements: Vec<usize> = self.ground.iter().collect();
        let mut out = vec![ElementSet::EMPTY];
        let mut stack = vec![(ElementSet::EMPTY, 0usize)];
        while let Some((set, from)) = stack.pop() {
            for (idx, &e) in elements.iter().enumerate().skip(from) {
                let grown = set.with(e);
                if self.independent_unchecked(grown) {
                    out.push(grown);
                    stack.push((grown, idx + 1));
                }
            }
        }
        out.sort_by(ElementSet::canonical_cmp);
        out
    }

    /// Maximal independent sets, in canonical order.
    pub fn bases(&self) -> Result<Vec<ElementSet>, MatroidError> {
        Ok(self
            .independent_sets()?
            .iter()
            .copied()
            .filter(|s| s.len() == self.rank)
            .collect())
    }

    /// `I_0, .., I_m` where `m` is the ground-set size.
    pub fn count_independent_by_size(&self) -> Result<Vec<u64>, MatroidError> {
        let mut counts = vec![0u64; self.size() + 1];
        for s in self.independent_sets()? {
            counts[s.len()] += 1;
        }
        Ok(counts)
    }

    /// Explicit copy of this matroid, revalidated through the axiom checker.
    pub fn materialize(&self) -> Result<Matroid, MatroidError> {
        let sets = self.independent_sets()?.to_vec();
        Matroid::from_sets(self.n, self.ground, sets).map(|m| Matroid {
            enumeration_bound: self.enumeration_bound,
            ..m
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elements: &[usize]) -> ElementSet {
        ElementSet::from_elements(elements.iter().copied())
    }

    fn parallel_pair_plus_free() -> Matroid {
        Matroid::from_independence_family(
            3,
            [vec![], vec![1], vec![2], vec![3], vec![1, 3], vec![2, 3]],
        )
        .unwrap()
    }

    fn all_subsets_up_to(n: usize, r: usize) -> Vec<Vec<usize>> {
        ElementSet::full(n)
            .subsets()
            .filter(|s| s.len() <= r)
            .map(ElementSet::to_vec)
            .collect()
    }

    #[test]
    fn explicit_u23_is_valid() {
        let m = Matroid::from_independence_family(3, all_subsets_up_to(3, 2)).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.count_independent_by_size().unwrap(), vec![1, 3, 3, 0]);
    }

    #[test]
    fn single_loop() {
        let m = Matroid::from_independence_family(1, [Vec::<usize>::new()]).unwrap();
        assert_eq!(m.loops(), set(&[1]));
        assert_eq!(m.rank(), 0);
        assert_eq!(m.count_independent_by_size().unwrap(), vec![1, 0]);
    }

    #[test]
    fn downward_closure_witness() {
        let err = Matroid::from_independence_family(2, [vec![], vec![2], vec![1, 2]]).unwrap_err();
        assert_eq!(
            err,
            MatroidError::AxiomViolation(AxiomViolation::DownwardClosure {
                subset: set(&[1]),
                superset: set(&[1, 2]),
            })
        );
    }

    #[test]
    fn empty_family_and_bad_labels() {
        assert_eq!(
            Matroid::from_independence_family(2, Vec::<Vec<usize>>::new()).unwrap_err(),
            MatroidError::EmptyFamily
        );
        assert!(matches!(
            Matroid::from_independence_family(2, [vec![3]]),
            Err(MatroidError::LabelOutOfRange { label: 3, n: 2 })
        ));
        assert!(matches!(
            Matroid::from_independence_family(21, [Vec::<usize>::new()]),
            Err(MatroidError::EnumerationLimitExceeded { .. })
        ));
    }

    #[test]
    fn uniform_constructor() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.count_independent_by_size().unwrap(), vec![1, 3, 3, 0]);
        let u02 = Matroid::uniform(0, 2).unwrap();
        assert_eq!(u02.independent_sets().unwrap(), &[ElementSet::EMPTY]);
        assert_eq!(u02.loops(), set(&[1, 2]));
        assert_eq!(Matroid::uniform(3, 3).unwrap().independent_sets().unwrap().len(), 8);
        assert!(matches!(Matroid::uniform(4, 3), Err(MatroidError::InvalidRank { .. })));
        assert!(matches!(Matroid::uniform(-1, 3), Err(MatroidError::InvalidRank { .. })));
    }

    #[test]
    fn graphic_constructor() {
        let k3 = Matroid::graphic(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.count_independent_by_size().unwrap(), vec![1, 3, 3, 0]);
        assert!(!k3.is_independent(set(&[1, 2, 3])).unwrap());

        let pair = Matroid::graphic(2, &[(0, 1), (0, 1)]).unwrap();
        let p = pair.parallel_partition().unwrap();
        assert_eq!(p.classes, vec![set(&[1, 2])]);
        assert_eq!(pair.rank_of(set(&[1, 2])).unwrap(), 1);

        let lp = Matroid::graphic(1, &[(0, 0)]).unwrap();
        assert_eq!(lp.loops(), set(&[1]));

        assert!(matches!(
            Matroid::graphic(2, &[(0, 2)]),
            Err(MatroidError::InvalidVertexIndex { vertex: 2, vertices: 2 })
        ));
    }

    #[test]
    fn linear_constructor() {
        let cols = |v: &[&[i64]]| -> Vec<Vec<BigInt>> {
            v.iter().map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect()
        };
        let m = Matroid::linear(2, &cols(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(m.independent_sets().unwrap(), u23.independent_sets().unwrap());

        let z = Matroid::linear(0, &cols(&[&[0, 0], &[1, 2]])).unwrap();
        assert_eq!(z.loops(), set(&[1]));

        let par = Matroid::linear(3, &cols(&[&[1, 2], &[1, 2], &[0, 1]])).unwrap();
        assert_eq!(par.rank_of(set(&[1, 2])).unwrap(), 1);
        // over GF(3), (1,2) and (2,1) = 2*(1,2) are parallel
        let gf3 = Matroid::linear(3, &cols(&[&[1, 2], &[2, 1]])).unwrap();
        assert_eq!(gf3.rank(), 1);
        let q = Matroid::linear(0, &cols(&[&[1, 2], &[2, 1]])).unwrap();
        assert_eq!(q.rank(), 2);

        assert_eq!(
            Matroid::linear(4, &cols(&[&[1]])).unwrap_err(),
            MatroidError::NonPrimeModulus(4)
        );
        assert_eq!(
            Matroid::linear(2, &cols(&[&[1], &[1, 0]])).unwrap_err(),
            MatroidError::RaggedColumns
        );
    }

    #[test]
    fn rank_queries() {
        let u23 = Matroid::uniform(2, 3).unwrap();
        assert_eq!(u23.rank_of(set(&[1, 2, 3])).unwrap(), 2);
        assert_eq!(u23.rank_of(ElementSet::EMPTY).unwrap(), 0);
        assert!(u23.is_independent(set(&[1, 2])).unwrap());
        assert!(!u23.is_independent(set(&[1, 2, 3])).unwrap());
        assert!(matches!(
            u23.is_independent(set(&[4])),
            Err(MatroidError::ElementOutOfRange { .. })
        ));
    }

    #[test]
    fn parallel_partitions() {
        let m = parallel_pair_plus_free();
        let p = m.parallel_partition().unwrap();
        assert_eq!(p.classes, vec![set(&[1, 2]), set(&[3])]);
        assert!(p.loops.is_empty());

        let u23 = Matroid::uniform(2, 3).unwrap().parallel_partition().unwrap();
        assert_eq!(u23.classes, vec![set(&[1]), set(&[2]), set(&[3])]);

        let u02 = Matroid::uniform(0, 2).unwrap().parallel_partition().unwrap();
        assert_eq!(u02.loops, set(&[1, 2]));
        assert_eq!(u02.class_count(), 0);
    }

    #[test]
    fn contractions() {
        let m = parallel_pair_plus_free();
        let same = m.contract(ElementSet::EMPTY).unwrap();
        assert_eq!(same.independent_sets().unwrap(), m.independent_sets().unwrap());

        let c = m.contract(set(&[3])).unwrap();
        assert_eq!(c.ground(), set(&[1, 2]));
        assert_eq!(c.independent_sets().unwrap(), &[ElementSet::EMPTY, set(&[1]), set(&[2])]);
        assert_eq!(c.rank(), 1);

        let u = Matroid::uniform(2, 3).unwrap().contract(set(&[1])).unwrap();
        assert_eq!(u.ground(), set(&[2, 3]));
        assert_eq!(u.independent_sets().unwrap(), &[ElementSet::EMPTY, set(&[2]), set(&[3])]);

        let twice = Matroid::uniform(3, 4).unwrap().contract(set(&[1])).unwrap().contract(set(&[2])).unwrap();
        assert_eq!(twice.ground(), set(&[3, 4]));
        assert_eq!(twice.rank(), 1);
        assert!(matches!(twice.contract(set(&[1])), Err(MatroidError::ElementOutOfRange { .. })));

        assert_eq!(
            m.contract(set(&[1, 2])).unwrap_err(),
            MatroidError::NotIndependent(set(&[1, 2]))
        );
    }

    #[test]
    fn counts_and_bases() {
        let m = parallel_pair_plus_free();
        assert_eq!(m.count_independent_by_size().unwrap(), vec![1, 3, 2, 0]);
        assert_eq!(m.bases().unwrap(), vec![set(&[1, 3]), set(&[2, 3])]);
        let small_bound = Matroid::uniform(1, 5).unwrap().with_enumeration_bound(4).unwrap();
        assert!(matches!(
            small_bound.count_independent_by_size(),
            Err(MatroidError::EnumerationLimitExceeded { n: 5, bound: 4 })
        ));
    }

    #[test]
    fn materialized_structured_matroids_validate() {
        let k4 = Matroid::graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let explicit = k4.materialize().unwrap();
        assert_eq!(explicit.kind(), MatroidKind::Explicit);
        assert_eq!(explicit.rank(), 3);
        assert_eq!(explicit.count_independent_by_size().unwrap(), vec![1, 6, 15, 16, 0, 0, 0]);
        let contracted = k4.contract(set(&[1])).unwrap().materialize().unwrap();
        assert_eq!(contracted.ground(), set(&[2, 3, 4, 5, 6]));
        assert_eq!(contracted.rank(), 2);
    }
}
