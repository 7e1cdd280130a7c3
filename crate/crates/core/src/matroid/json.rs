use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{linear::LinearRepr, Matroid, MatroidError, Repr};

/// On-disk description of a matroid.
///
/// ```json
/// {"kind": "explicit", "n": 3, "sets": [[], [1], [2], [1, 2]]}
/// {"kind": "uniform", "r": 2, "n": 3}
/// {"kind": "graphic", "vertices": 3, "edges": [[0, 1], [1, 2], [0, 2]]}
/// {"kind": "linear", "modulus": 2, "columns": [["1", "0"], ["0", "1"]]}
/// ```
///
/// Explicit sets use 1-based element labels, graph vertices are 0-based, and
/// a linear `modulus` of 0 means the rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum MatroidSpec {
    Explicit { n: usize, sets: Vec<Vec<usize>> },
    Uniform { r: i64, n: usize },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    Linear { modulus: u64, columns: Vec<Vec<String>> },
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid, MatroidError> {
        match self {
            MatroidSpec::Explicit { n, sets } => Matroid::from_independence_family(*n, sets.iter().cloned()),
            MatroidSpec::Uniform { r, n } => Matroid::uniform(*r, *n),
            MatroidSpec::Graphic { vertices, edges } => Matroid::graphic(*vertices, edges),
            MatroidSpec::Linear { modulus, columns } => {
                let parsed = columns
                    .iter()
                    .map(|col| {
                        col.iter()
                            .map(|s| BigInt::from_str(s.trim()).map_err(|_| MatroidError::InvalidEntry(s.clone())))
                            .collect::<Result<Vec<_>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Matroid::linear(*modulus, &parsed)
            }
        }
    }
}

impl Matroid {
    /// Serializable description. Contractions are written out as explicit families.
    pub fn to_spec(&self) -> Result<MatroidSpec, MatroidError> {
        Ok(match &self.repr {
            Repr::Uniform { r } => MatroidSpec::Uniform {
                r: *r as i64,
                n: self.n,
            },
            Repr::Graphic(g) => MatroidSpec::Graphic {
                vertices: g.vertices,
                edges: g.edges.clone(),
            },
            Repr::Linear(l) => match l.as_ref() {
                LinearRepr::Prime { modulus, columns } => MatroidSpec::Linear {
                    modulus: *modulus,
                    columns: columns
                        .iter()
                        .map(|c| c.iter().map(u64::to_string).collect())
                        .collect(),
                },
                LinearRepr::Rational { columns } => MatroidSpec::Linear {
                    modulus: 0,
                    columns: columns
                        .iter()
                        .map(|c| c.iter().map(BigInt::to_string).collect())
                        .collect(),
                },
            },
            Repr::Explicit(_) | Repr::Contraction { .. } => MatroidSpec::Explicit {
                n: self.n,
                sets: self.independent_sets()?.iter().map(|s| s.to_vec()).collect(),
            },
        })
    }
}
