use std::collections::BTreeSet;

use super::{Simplex, SimplicialComplex};
use crate::{Error, Result};

/// A full subcomplex, stored as its vertex set. Vertex ids are stable under
/// reorientation, so the same value works for every orientation of a complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Subcomplex {
    vertices: BTreeSet<u32>,
}

impl Subcomplex {
    pub fn empty() -> Self {
        Subcomplex::default()
    }

    pub fn whole(x: &SimplicialComplex) -> Self {
        Subcomplex {
            vertices: (0..x.vertex_count() as u32).collect(),
        }
    }

    pub fn spanned_by(ids: impl IntoIterator<Item = u32>) -> Self {
        Subcomplex {
            vertices: ids.into_iter().collect(),
        }
    }

    pub fn from_labels<S: AsRef<str>>(x: &SimplicialComplex, labels: &[S]) -> Result<Self> {
        let ids = labels
            .iter()
            .map(|l| {
                x.vertex_id(l.as_ref())
                    .ok_or_else(|| Error::NotInComplex(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::spanned_by(ids))
    }

    pub fn vertices(&self) -> &BTreeSet<u32> {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.vertices.contains(&v)
    }

    /// True iff every vertex of the (nonempty) simplex lies in the subcomplex.
    pub fn contains(&self, s: &Simplex) -> bool {
        !s.is_empty() && s.vertices().iter().all(|v| self.vertices.contains(v))
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// `L^vc`: the full subcomplex on the remaining vertices.
    pub fn complement(&self, x: &SimplicialComplex) -> Subcomplex {
        Subcomplex {
            vertices: (0..x.vertex_count() as u32)
                .filter(|v| !self.vertices.contains(v))
                .collect(),
        }
    }

    pub fn simplices<'a>(&'a self, x: &'a SimplicialComplex, k: isize) -> impl Iterator<Item = &'a Simplex> {
        x.simplices(k).iter().filter(move |s| self.contains(s))
    }

    pub fn labels(&self, x: &SimplicialComplex) -> Vec<String> {
        x.order()
            .into_iter()
            .filter(|v| self.vertices.contains(v))
            .map(|v| x.label(v).to_string())
            .collect()
    }

    /// Order putting every complement vertex before every vertex of `self`,
    /// each block keeping its relative order.
    pub fn vc_before_order(&self, x: &SimplicialComplex) -> Vec<u32> {
        let order = x.order();
        let (inside, outside): (Vec<u32>, Vec<u32>) =
            order.into_iter().partition(|v| self.vertices.contains(v));
        outside.into_iter().chain(inside).collect()
    }

    /// `x` reoriented so that `L^vc` comes before `L`.
    pub fn orient_vc_before(&self, x: &SimplicialComplex) -> SimplicialComplex {
        x.reoriented(&self.vc_before_order(x)).expect("a permutation")
    }

    pub fn has_vc_before(&self, x: &SimplicialComplex) -> bool {
        self.vc_before_order(x) == x.order()
    }

    pub fn is_subset_of(&self, other: &Subcomplex) -> bool {
        self.vertices.is_subset(&other.vertices)
    }
}

/// Where a (co)chain complex lives: all of `X`, a full subcomplex `L`, or the
/// pair `(X, L)` (simplices of `X` not in `L`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Region {
    Whole,
    Sub(Subcomplex),
    Relative(Subcomplex),
}

impl Region {
    pub fn contains(&self, s: &Simplex) -> bool {
        match self {
            Region::Whole => !s.is_empty(),
            Region::Sub(l) => l.contains(s),
            Region::Relative(l) => !s.is_empty() && !l.contains(s),
        }
    }

    pub fn simplices<'a>(&'a self, x: &'a SimplicialComplex, k: isize) -> impl Iterator<Item = &'a Simplex> {
        x.simplices(k).iter().filter(move |s| self.contains(s))
    }

    pub fn is_relative(&self) -> bool {
        matches!(self, Region::Relative(_))
    }
}
