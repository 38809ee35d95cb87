//! Chain complexes of finitely generated free modules, their homology and
//! induced maps.
//!
//! Everything is graded homologically (`d_k : C_k → C_{k-1}`). A cochain
//! complex with `δ^l : C^l → C^{l+1}` is stored with `C^l` in degree `-l`.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::matrix::Matrix;
use super::ring::{Ring, Scalar};
use super::smith::smith_normal_form;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: Ring,
    ranks: BTreeMap<i32, usize>,
    diffs: BTreeMap<i32, Matrix>,
}

impl ChainComplex {
    /// `diffs[k]` is `d_k : C_k → C_{k-1}`; missing entries are zero maps.
    pub fn new(ring: Ring, ranks: BTreeMap<i32, usize>, diffs: BTreeMap<i32, Matrix>) -> Result<Self> {
        let ranks: BTreeMap<i32, usize> = ranks.into_iter().filter(|(_, r)| *r > 0).collect();
        let rank = |k: i32| ranks.get(&k).copied().unwrap_or(0);
        let mut clean = BTreeMap::new();
        for (k, d) in diffs {
            if (d.rows(), d.cols()) != (rank(k - 1), rank(k)) {
                return Err(Error::Shape(format!(
                    "d_{k} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    rank(k - 1),
                    rank(k)
                )));
            }
            let d = d.reduced(ring);
            if !d.is_zero() {
                clean.insert(k, d);
            }
        }
        let c = ChainComplex {
            ring,
            ranks,
            diffs: clean,
        };
        for k in c.diffs.keys() {
            if let Some(next) = c.diffs.get(&(k - 1)) {
                if !next.mul(&c.diffs[k], ring).is_zero() {
                    return Err(Error::NotAComplex(*k));
                }
            }
        }
        Ok(c)
    }

    /// Cochain complex: `ranks[l] = rank C^l`, `deltas[l] : C^l → C^{l+1}`.
    pub fn from_cochain(ring: Ring, ranks: BTreeMap<i32, usize>, deltas: BTreeMap<i32, Matrix>) -> Result<Self> {
        let ranks = ranks.into_iter().map(|(l, r)| (-l, r)).collect();
        let diffs = deltas.into_iter().map(|(l, d)| (-l, d)).collect();
        Self::new(ring, ranks, diffs)
    }

    pub fn zero(ring: Ring) -> Self {
        ChainComplex {
            ring,
            ranks: BTreeMap::new(),
            diffs: BTreeMap::new(),
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn rank(&self, k: i32) -> usize {
        self.ranks.get(&k).copied().unwrap_or(0)
    }

    /// Degrees carrying a nonzero group, ascending.
    pub fn degrees(&self) -> Vec<i32> {
        self.ranks.keys().copied().collect()
    }

    pub fn differential(&self, k: i32) -> Matrix {
        self.diffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.rank(k - 1), self.rank(k)))
    }

    /// Same groups with degree `k` moved to `k + s`.
    pub fn shifted(&self, s: i32) -> Self {
        ChainComplex {
            ring: self.ring,
            ranks: self.ranks.iter().map(|(k, r)| (k + s, *r)).collect(),
            diffs: self.diffs.iter().map(|(k, d)| (k + s, d.clone())).collect(),
        }
    }

    /// `Hom(C, R)`: degree `k` moves to `-k` and differentials are transposed.
    pub fn dual(&self) -> Self {
        ChainComplex {
            ring: self.ring,
            ranks: self.ranks.iter().map(|(k, r)| (-k, *r)).collect(),
            diffs: self.diffs.iter().map(|(k, d)| (-(k - 1), d.transpose())).collect(),
        }
    }

    /// Every differential multiplied by `sign(k)`.
    pub fn with_signs(&self, sign: impl Fn(i32) -> i64) -> Self {
        let ring = self.ring;
        ChainComplex {
            ring,
            ranks: self.ranks.clone(),
            diffs: self
                .diffs
                .iter()
                .map(|(k, d)| (*k, d.scaled(&ring.from_int(sign(*k)), ring)))
                .collect(),
        }
    }

    pub fn is_cycle(&self, k: i32, c: &[Scalar]) -> bool {
        self.differential(k).apply(c, self.ring).iter().all(Zero::is_zero)
    }

    pub fn homology(&self, k: i32) -> HomologyPresentation {
        HomologyPresentation::compute(self, k)
    }

    /// Cohomology in degree `l` of a complex built by [`ChainComplex::from_cochain`].
    pub fn cohomology(&self, l: i32) -> HomologyPresentation {
        self.homology(-l)
    }
}

/// `H_k ≅ R^free_rank ⊕ ⊕ R/(d_i)` with explicit cycle representatives.
///
/// Coordinates list torsion components first (reduced mod `d_i`), then free ones.
#[derive(Clone, Debug)]
pub struct HomologyPresentation {
    ring: Ring,
    degree: i32,
    pub free_rank: usize,
    pub torsion: Vec<Scalar>,
    generators: Vec<Vec<Scalar>>,
    coords: Matrix,
    boundary: Matrix,
}

impl HomologyPresentation {
    fn compute(c: &ChainComplex, k: i32) -> Self {
        let ring = c.ring;
        let n = c.rank(k);
        let dk = c.differential(k);
        let dk1 = c.differential(k + 1);
        let s = smith_normal_form(&dk, ring);
        let r = s.rank();
        let kernel = s.v.col_block(r..n);
        let rel = s.v_inv.mul(&dk1, ring);
        assert!(
            rel.row_block(0..r).is_zero(),
            "image of d_{} leaves the kernel of d_{k}",
            k + 1
        );
        let a = rel.row_block(r..n);
        let t = smith_normal_form(&a, ring);
        let z = n - r;
        let kept: Vec<usize> = (0..z)
            .filter(|&i| i >= t.rank() || !ring.is_unit(&t.diagonal[i]))
            .collect();
        let torsion: Vec<Scalar> = kept
            .iter()
            .filter(|&&i| i < t.rank())
            .map(|&i| t.diagonal[i].clone())
            .collect();
        let gens_all = kernel.mul(&t.u_inv, ring);
        let generators = kept.iter().map(|&i| gens_all.column(i)).collect();
        let to_kernel = t.u.mul(&s.v_inv.row_block(r..n), ring);
        let mut coords = Matrix::zeros(kept.len(), n);
        for (row, &i) in kept.iter().enumerate() {
            for (j, v) in to_kernel.row_entries(i) {
                coords.set(row, j, v.clone());
            }
        }
        HomologyPresentation {
            ring,
            degree: k,
            free_rank: kept.len() - torsion.len(),
            torsion,
            generators,
            coords,
            boundary: dk,
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn degree(&self) -> i32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of generators (torsion plus free).
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Cycle representatives, torsion generators first.
    pub fn generators(&self) -> &[Vec<Scalar>] {
        &self.generators
    }

    /// Coordinates of a cycle, or `None` if `c` is not a cycle.
    pub fn coordinates(&self, c: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.boundary.apply(c, self.ring).iter().all(Zero::is_zero) {
            return None;
        }
        let raw = self.coords.apply(c, self.ring);
        Some(
            raw.into_iter()
                .enumerate()
                .map(|(i, x)| match self.torsion.get(i) {
                    Some(d) => self.ring.rem(&x, d),
                    None => x,
                })
                .collect(),
        )
    }

    /// True iff `c` is a cycle whose class vanishes.
    pub fn is_boundary(&self, c: &[Scalar]) -> bool {
        self.coordinates(c)
            .is_some_and(|v| v.iter().all(Zero::is_zero))
    }

    /// Relation matrix of the presentation: `R^len / im(relations)`.
    fn relations(&self) -> Matrix {
        let mut m = Matrix::zeros(self.len(), self.torsion.len());
        for (i, d) in self.torsion.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        m
    }
}

/// Degree-preserving chain map together with its endpoints.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: ChainComplex,
    target: ChainComplex,
    maps: BTreeMap<i32, Matrix>,
}

impl ChainMap {
    pub fn new(source: &ChainComplex, target: &ChainComplex, maps: BTreeMap<i32, Matrix>) -> Result<Self> {
        let ring = source.ring;
        let mut clean = BTreeMap::new();
        for (k, f) in maps {
            if (f.rows(), f.cols()) != (target.rank(k), source.rank(k)) {
                return Err(Error::Shape(format!(
                    "f_{k} is {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    target.rank(k),
                    source.rank(k)
                )));
            }
            clean.insert(k, f.reduced(ring));
        }
        let m = ChainMap {
            source: source.clone(),
            target: target.clone(),
            maps: clean,
        };
        let degrees: std::collections::BTreeSet<i32> = source
            .degrees()
            .into_iter()
            .chain(target.degrees())
            .collect();
        for k in degrees {
            let lhs = target.differential(k).mul(&m.component(k), ring);
            let rhs = m.component(k - 1).mul(&source.differential(k), ring);
            if lhs != rhs {
                return Err(Error::NotAChainMap(k));
            }
        }
        Ok(m)
    }

    pub fn identity(c: &ChainComplex) -> Self {
        let maps = c.degrees().into_iter().map(|k| (k, Matrix::identity(c.rank(k)))).collect();
        ChainMap {
            source: c.clone(),
            target: c.clone(),
            maps,
        }
    }

    pub fn source(&self) -> &ChainComplex {
        &self.source
    }

    pub fn target(&self) -> &ChainComplex {
        &self.target
    }

    pub fn component(&self, k: i32) -> Matrix {
        self.maps
            .get(&k)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.target.rank(k), self.source.rank(k)))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMap) -> Result<ChainMap> {
        let ring = self.source.ring;
        let maps = self
            .source
            .degrees()
            .into_iter()
            .map(|k| (k, other.component(k).mul(&self.component(k), ring)))
            .collect();
        ChainMap::new(&self.source, &other.target, maps)
    }

    pub fn induced(&self, k: i32) -> InducedMap {
        InducedMap::compute(self, k)
    }
}

/// `H_k(f)` in the coordinates of the two presentations.
#[derive(Clone, Debug)]
pub struct InducedMap {
    pub source: HomologyPresentation,
    pub target: HomologyPresentation,
    pub matrix: Matrix,
    pub is_isomorphism: bool,
}

impl InducedMap {
    fn compute(f: &ChainMap, k: i32) -> Self {
        let ring = f.source.ring;
        let source = f.source.homology(k);
        let target = f.target.homology(k);
        let fk = f.component(k);
        let columns: Vec<Vec<Scalar>> = source
            .generators()
            .iter()
            .map(|g| {
                target
                    .coordinates(&fk.apply(g, ring))
                    .expect("chain maps send cycles to cycles")
            })
            .collect();
        let matrix = Matrix::from_columns(target.len(), &columns);
        let is_isomorphism = is_bijective(&matrix, &source, &target, ring);
        InducedMap {
            source,
            target,
            matrix,
            is_isomorphism,
        }
    }
}

/// Decides bijectivity of the module map `M1 → M2` given on presentation
/// generators by `f`.
fn is_bijective(f: &Matrix, m1: &HomologyPresentation, m2: &HomologyPresentation, ring: Ring) -> bool {
    let stacked = f.hstack(&m2.relations());
    let s = smith_normal_form(&stacked, ring);
    let surjective = s.rank() == m2.len() && s.diagonal.iter().all(|d| ring.is_unit(d));
    if !surjective {
        return false;
    }
    let kernel = s.v.col_block(s.rank()..stacked.cols());
    (0..kernel.cols()).all(|j| {
        (0..m1.len()).all(|i| {
            let x = kernel.get(i, j);
            match m1.torsion.get(i) {
                Some(d) => ring.divides(d, &x),
                None => x.is_zero(),
            }
        })
    })
}
