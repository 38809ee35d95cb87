//! Finite oriented simplicial complexes.
//!
//! Vertices carry a stable id (their index in the label table) and a position
//! in the global total order. Reorienting keeps ids and changes positions, so
//! vertex sets can be compared across orientations.

mod generator;
mod io;
mod simplex;
mod subcomplex;

use std::collections::{BTreeSet, HashMap};
use std::fmt;

pub use generator::Gen;
pub use io::{parse_complex, parse_filtration, parse_map, parse_subcomplex, serialize_complex};
pub use simplex::{sign, Simplex};
pub use subcomplex::{Region, Subcomplex};

use crate::{Error, Result};

#[derive(Clone)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    ids: HashMap<String, u32>,
    position: Vec<usize>,
    by_dim: Vec<Vec<Simplex>>,
    index: HashMap<Simplex, usize>,
    cofaces: HashMap<Simplex, Vec<Simplex>>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let order: Vec<&str> = self.order().iter().map(|&v| self.label(v)).collect();
        f.debug_struct("SimplicialComplex")
            .field("order", &order)
            .field("f_vector", &self.f_vector())
            .finish()
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.position == other.position && self.by_dim == other.by_dim
    }
}

impl SimplicialComplex {
    /// `order` lists the vertex labels in orientation order; `maximal` lists
    /// generating simplices by label. Faces are added automatically.
    pub fn from_maximal<S: AsRef<str>>(order: &[S], maximal: &[Vec<S>]) -> Result<Self> {
        let labels: Vec<String> = order.iter().map(|s| s.as_ref().to_string()).collect();
        let mut ids = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if ids.insert(l.clone(), i as u32).is_some() {
                return Err(Error::Parse {
                    line: 0,
                    msg: format!("vertex `{l}` listed twice in the order"),
                });
            }
        }
        let mut max_ids = Vec::new();
        for m in maximal {
            let mut v = Vec::new();
            for l in m {
                let id = *ids.get(l.as_ref()).ok_or_else(|| Error::Parse {
                    line: 0,
                    msg: format!("unknown vertex `{}`", l.as_ref()),
                })?;
                if v.contains(&id) {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("vertex `{}` repeated in a simplex", l.as_ref()),
                    });
                }
                v.push(id);
            }
            max_ids.push(v);
        }
        let position: Vec<usize> = (0..labels.len()).collect();
        Ok(Self::build(labels, ids, position, &max_ids))
    }

    fn build(labels: Vec<String>, ids: HashMap<String, u32>, position: Vec<usize>, maximal: &[Vec<u32>]) -> Self {
        let sort = |mut v: Vec<u32>| {
            v.sort_by_key(|&x| position[x as usize]);
            Simplex::from_ordered(v)
        };
        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        for m in maximal {
            let n = m.len();
            assert!(n < 31, "simplex dimension too large");
            for mask in 1u32..(1 << n) {
                let mut pos: Vec<usize> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| position[m[i] as usize])
                    .collect();
                pos.sort_unstable();
                all.insert(pos);
            }
        }
        let mut by_pos = vec![0u32; labels.len()];
        for (id, &p) in position.iter().enumerate() {
            by_pos[p] = id as u32;
        }
        let max_dim = all.iter().map(|p| p.len()).max().unwrap_or(0);
        let mut by_dim: Vec<Vec<Simplex>> = vec![Vec::new(); max_dim];
        let mut sorted: Vec<&Vec<usize>> = all.iter().collect();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        for p in sorted {
            let s = Simplex::from_ordered(p.iter().map(|&q| by_pos[q]).collect());
            by_dim[p.len() - 1].push(s);
        }
        let mut index = HashMap::new();
        for level in &by_dim {
            for (i, s) in level.iter().enumerate() {
                index.insert(s.clone(), i);
            }
        }
        let mut cofaces: HashMap<Simplex, Vec<Simplex>> = HashMap::new();
        for level in &by_dim {
            for alpha in level {
                let n = alpha.len();
                for mask in 1u32..(1 << n) {
                    let sub: Vec<u32> = (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| alpha.vertex(i))
                        .collect();
                    cofaces.entry(sort(sub)).or_default().push(alpha.clone());
                }
            }
        }
        SimplicialComplex {
            labels,
            ids,
            position,
            by_dim,
            index,
            cofaces,
        }
    }

    pub fn empty() -> Self {
        Self::build(Vec::new(), HashMap::new(), Vec::new(), &[])
    }

    /// Same complex with the orientation given by `order` (vertex ids).
    pub fn reoriented(&self, order: &[u32]) -> Result<Self> {
        let n = self.labels.len();
        let mut position = vec![usize::MAX; n];
        for (p, &v) in order.iter().enumerate() {
            if (v as usize) >= n || position[v as usize] != usize::MAX {
                return Err(Error::Orientation("order is not a permutation of the vertices".into()));
            }
            position[v as usize] = p;
        }
        if order.len() != n {
            return Err(Error::Orientation("order misses vertices".into()));
        }
        let maximal: Vec<Vec<u32>> = self.maximal_simplices().iter().map(|s| s.vertices().to_vec()).collect();
        Ok(Self::build(self.labels.clone(), self.ids.clone(), position, &maximal))
    }

    /// Same complex with the orientation given by vertex labels.
    pub fn reoriented_by_labels<S: AsRef<str>>(&self, order: &[S]) -> Result<Self> {
        let ids = order
            .iter()
            .map(|l| {
                self.vertex_id(l.as_ref())
                    .ok_or_else(|| Error::Orientation(format!("unknown vertex `{}`", l.as_ref())))
            })
            .collect::<Result<Vec<_>>>()?;
        self.reoriented(&ids)
    }

    /// Swaps two vertices in the order.
    pub fn with_swapped(&self, u: u32, w: u32) -> Self {
        let mut order = self.order();
        let (i, j) = (self.position(u), self.position(w));
        order.swap(i, j);
        self.reoriented(&order).expect("a permutation")
    }

    pub fn dim(&self) -> isize {
        self.by_dim.len() as isize - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_id(&self, label: &str) -> Option<u32> {
        self.ids.get(label).copied()
    }

    pub fn position(&self, v: u32) -> usize {
        self.position[v as usize]
    }

    /// Vertex ids in orientation order.
    pub fn order(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = (0..self.labels.len() as u32).collect();
        ids.sort_by_key(|&v| self.position(v));
        ids
    }

    pub fn order_labels(&self) -> Vec<String> {
        self.order().into_iter().map(|v| self.label(v).to_string()).collect()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    /// The k-simplices, sorted by vertex positions.
    pub fn simplices(&self, k: isize) -> &[Simplex] {
        if k < 0 {
            return &[];
        }
        self.by_dim.get(k as usize).map_or(&[], Vec::as_slice)
    }

    pub fn all_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index.contains_key(s)
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Simplices containing `s` (including `s`), by dimension.
    pub fn cofaces(&self, s: &Simplex) -> &[Simplex] {
        self.cofaces.get(s).map_or(&[], Vec::as_slice)
    }

    /// Cofaces of `s` of dimension `k`.
    pub fn cofaces_of_dim(&self, s: &Simplex, k: isize) -> impl Iterator<Item = &Simplex> {
        self.cofaces(s).iter().filter(move |a| a.dim() == k)
    }

    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        self.all_simplices()
            .filter(|s| self.cofaces(s).len() == 1)
            .cloned()
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let n = self.dim();
        self.maximal_simplices().iter().all(|s| s.dim() == n)
    }

    /// Orders a vertex set by this complex's orientation (no membership check).
    pub fn sorted(&self, mut ids: Vec<u32>) -> Simplex {
        ids.sort_by_key(|&v| self.position(v));
        ids.dedup();
        Simplex::from_ordered(ids)
    }

    /// Re-expresses a simplex taken from another orientation of the same vertices.
    pub fn orient(&self, s: &Simplex) -> Simplex {
        self.sorted(s.vertices().to_vec())
    }

    /// The simplex on a vertex set, if present.
    pub fn simplex(&self, ids: &[u32]) -> Option<Simplex> {
        let s = self.sorted(ids.to_vec());
        (s.len() == ids.len() && self.contains(&s)).then_some(s)
    }

    pub fn simplex_by_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Simplex> {
        let ids = labels
            .iter()
            .map(|l| {
                self.vertex_id(l.as_ref())
                    .ok_or_else(|| Error::NotInComplex(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.simplex(&ids)
            .ok_or_else(|| Error::NotInComplex(format!("[{}]", labels.iter().map(AsRef::as_ref).collect::<Vec<_>>().join(","))))
    }

    /// Sign of the permutation taking `s`'s listed vertex order to this orientation.
    pub fn permutation_sign(&self, s: &Simplex) -> i64 {
        permutation_sign(s.vertices().iter().map(|&v| self.position(v)))
    }

    /// `σ⋆τ`: the simplex on the union of the vertex sets, or the empty simplex
    /// when that union spans nothing in the complex.
    pub fn internal_join(&self, s: &Simplex, t: &Simplex) -> Result<Simplex> {
        for x in [s, t] {
            if !x.is_empty() && !self.contains(x) {
                return Err(Error::NotInComplex(self.display(x)));
            }
        }
        let mut ids: Vec<u32> = s.vertices().to_vec();
        ids.extend_from_slice(t.vertices());
        let joined = self.sorted(ids);
        Ok(if self.contains(&joined) { joined } else { Simplex::empty() })
    }

    fn require(&self, s: &Simplex) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::NotInComplex(self.display(s)))
        }
    }

    /// Closed star: every face of every simplex containing `s`.
    pub fn star(&self, s: &Simplex) -> Result<BTreeSet<Simplex>> {
        self.require(s)?;
        Ok(self.cofaces(s).iter().flat_map(|a| a.faces()).collect())
    }

    /// Simplices containing `s`.
    pub fn open_star(&self, s: &Simplex) -> Result<BTreeSet<Simplex>> {
        self.require(s)?;
        Ok(self.cofaces(s).iter().cloned().collect())
    }

    /// Simplices disjoint from `s` whose join with `s` is a simplex.
    pub fn link(&self, s: &Simplex) -> Result<BTreeSet<Simplex>> {
        Ok(self
            .star(s)?
            .into_iter()
            .filter(|t| t.is_disjoint_from(s))
            .collect())
    }

    /// `X − st̊σ`: simplices not containing `s`.
    pub fn open_star_complement(&self, s: &Simplex) -> Result<BTreeSet<Simplex>> {
        self.require(s)?;
        Ok(self
            .all_simplices()
            .filter(|t| !s.is_face_of(t))
            .cloned()
            .collect())
    }

    /// `[a,b,c]` with vertex labels.
    pub fn display(&self, s: &Simplex) -> String {
        let l: Vec<&str> = s.vertices().iter().map(|&v| self.label(v)).collect();
        format!("[{}]", l.join(","))
    }

    /// Full subcomplex spanned by a vertex set, as a standalone complex.
    pub fn induced_complex(&self, sub: &Subcomplex) -> SimplicialComplex {
        let maximal: Vec<Vec<u32>> = self
            .all_simplices()
            .filter(|s| sub.contains(s))
            .map(|s| s.vertices().to_vec())
            .collect();
        Self::build(self.labels.clone(), self.ids.clone(), self.position.clone(), &maximal)
    }
}

/// Parity of the permutation sorting `keys`.
pub fn permutation_sign(keys: impl Iterator<Item = usize>) -> i64 {
    let keys: Vec<usize> = keys.collect();
    let mut inversions = 0usize;
    for i in 0..keys.len() {
        for j in i + 1..keys.len() {
            if keys[i] > keys[j] {
                inversions += 1;
            }
        }
    }
    sign(inversions)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn simplex(x: &SimplicialComplex, l: &[&str]) -> Simplex {
        x.simplex_by_labels(l).unwrap()
    }

    fn set(x: &SimplicialComplex, items: &[&[&str]]) -> BTreeSet<Simplex> {
        items.iter().map(|l| simplex(x, l)).collect()
    }

    #[test]
    fn joins() {
        let c3 = fixtures::c3();
        assert_eq!(c3.internal_join(&simplex(&c3, &["0"]), &simplex(&c3, &["1"])).unwrap(), simplex(&c3, &["0", "1"]));
        let b = fixtures::bowtie();
        assert!(b.internal_join(&simplex(&b, &["1"]), &simplex(&b, &["3"])).unwrap().is_empty());
        let t4 = fixtures::t4();
        assert!(t4
            .internal_join(&simplex(&t4, &["0", "1"]), &simplex(&t4, &["2", "3"]))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn links_and_complements() {
        let c3 = fixtures::c3();
        let v0 = simplex(&c3, &["0"]);
        assert_eq!(c3.link(&v0).unwrap(), set(&c3, &[&["1"], &["2"]]));
        assert_eq!(c3.open_star_complement(&v0).unwrap(), set(&c3, &[&["1"], &["2"], &["1", "2"]]));
        let t4 = fixtures::t4();
        let e = simplex(&t4, &["0", "1"]);
        assert_eq!(t4.link(&e).unwrap(), set(&t4, &[&["2"], &["3"]]));
        assert!(t4.open_star_complement(&e).unwrap().contains(&simplex(&t4, &["1", "2", "3"])));
        let b = fixtures::bowtie();
        assert_eq!(
            b.link(&simplex(&b, &["0"])).unwrap(),
            set(&b, &[&["1"], &["2"], &["3"], &["4"], &["1", "2"], &["3", "4"]])
        );
    }

    #[test]
    fn faces_are_closed_and_order_preserving() {
        for (_, x) in fixtures::all() {
            for s in x.all_simplices() {
                for (_, f) in s.boundary_faces() {
                    if !f.is_empty() {
                        assert!(x.contains(&f));
                        assert_eq!(x.orient(&f), f);
                    }
                }
            }
        }
    }

    #[test]
    fn swap_signs() {
        let t4 = fixtures::t4();
        let swapped = t4.with_swapped(0, 1);
        for s in t4.simplices(2) {
            let expected = if s.contains_vertex(0) && s.contains_vertex(1) { -1 } else { 1 };
            assert_eq!(swapped.permutation_sign(s), expected);
        }
    }
}
