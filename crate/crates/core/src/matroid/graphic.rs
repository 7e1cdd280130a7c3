use crate::element_set::ElementSet;

/// Edge list of a multigraph; edge `i` (1-based) is element `i` of the matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GraphicRepr {
    pub(crate) vertices: usize,
    pub(crate) edges: Vec<(usize, usize)>,
}

impl GraphicRepr {
    /// True iff the edges in `set` form a forest.
    pub(crate) fn is_forest(&self, set: ElementSet) -> bool {
        let mut dsu = DisjointSets::new(self.vertices);
        set.iter().all(|e| {
            let (u, v) = self.edges[e - 1];
            dsu.union(u, v)
        })
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}
