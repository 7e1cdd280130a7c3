use serde::Serialize;

use crate::polynomial::SparsePolynomial;

/// A split of the active variables with no monomial touching both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Decomposition {
    /// Independent re-check against `f`.
    pub fn verify(&self, f: &SparsePolynomial) -> bool {
        let active = f.active_variables();
        let mut both: Vec<usize> = self.left.iter().chain(&self.right).copied().collect();
        both.sort_unstable();
        if self.left.is_empty() || self.right.is_empty() || both != active {
            return false;
        }
        f.terms().all(|(e, _)| {
            let mut support = e.support();
            let first = support.next();
            match first {
                None => true,
                Some(v) => {
                    let side = self.left.contains(&v);
                    support.all(|w| self.left.contains(&w) == side)
                }
            }
        })
    }
}

/// Connectivity of the graph on active variables in which `i ~ j` whenever
/// `∂_i∂_j f ≠ 0`. Two variables share a monomial exactly when that mixed
/// partial is nonzero, so the graph is built from monomial supports.
pub fn is_indecomposable(f: &SparsePolynomial) -> Result<(), Decomposition> {
    let n = f.nvars();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (e, _) in f.terms() {
        let mut support = e.support();
        if let Some(first) = support.next() {
            for other in support {
                let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                if a != b {
                    parent[b] = a;
                }
            }
        }
    }
    let active = f.active_variables();
    let Some(&root_var) = active.first() else {
        return Ok(());
    };
    let root = find(&mut parent, root_var);
    let (left, right): (Vec<usize>, Vec<usize>) = active.into_iter().partition(|&v| find(&mut parent, v) == root);
    if right.is_empty() {
        Ok(())
    } else {
        Err(Decomposition { left, right })
    }
}
