//! Serializable views of homology groups and matrices.

use serde::Serialize;

use crate::algebra::{HomologyPresentation, Matrix, Scalar};
use crate::chain::Graded;
use crate::complex::SimplicialComplex;
use crate::sheaf::StalkGen;

/// `{rank, torsion, generators}`; each generator is a list of `[symbol, coefficient]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Group {
    pub rank: usize,
    pub torsion: Vec<String>,
    pub generators: Vec<Vec<(String, String)>>,
}

impl Group {
    pub fn new(h: &HomologyPresentation, labels: &[String]) -> Self {
        Group {
            rank: h.free_rank,
            torsion: h.torsion.iter().map(ToString::to_string).collect(),
            generators: h
                .generators()
                .iter()
                .map(|g| {
                    labels
                        .iter()
                        .zip(g)
                        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                        .map(|(l, c)| (l.clone(), c.to_string()))
                        .collect()
                })
                .collect(),
        }
    }

    /// The group as `ℤ^r ⊕ ℤ/d ⊕ …`-style text, for quick inspection.
    pub fn summary(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if self.rank > 0 {
            parts.push(format!("R^{}", self.rank));
        }
        parts.extend(self.torsion.iter().map(|d| format!("R/{d}")));
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    m.to_dense().iter().map(|r| r.iter().map(Scalar::to_string).collect()).collect()
}

/// Labels of a stalk basis in degree `k`; rank-one stalks print as the bare simplex.
pub fn stalk_labels(x: &SimplicialComplex, basis: &Graded<StalkGen>, k: i32, plain: bool) -> Vec<String> {
    basis
        .at(k)
        .iter()
        .map(|(s, a)| if plain { x.display(s) } else { format!("{}#{a}", x.display(s)) })
        .collect()
}
