//! Combinatorial sheaves and cosheaves with free stalks, their (co)chain
//! complexes, sections, and the transport functors.
//!
//! Stalks and structure maps are keyed by vertex sets, so one sheaf serves
//! every orientation of its complex.

mod dsl;
mod transport;

use std::collections::BTreeMap;

use num_traits::Zero;

pub use dsl::{parse_cosheaf, parse_sheaf};
pub use transport::{transported_basis, Morphism};

use crate::algebra::{int, is_invertible, smith_normal_form, ChainComplex, ChainMap, HomologyPresentation, Matrix, Ring, Scalar};
use crate::chain::{build_complex, build_map, Chain, Graded, Outside};
use crate::complex::{sign, Region, Simplex, SimplicialComplex, Subcomplex};
use crate::{Error, Result};

/// Basis vector `a` of the stalk at a simplex.
pub type StalkGen = (Simplex, usize);

type Key = Vec<u32>;

fn key(s: &Simplex) -> Key {
    let mut v = s.vertices().to_vec();
    v.sort_unstable();
    v
}

/// Stalk ranks and the matrices along every proper face relation, stored in
/// the direction of the functor.
#[derive(Clone, Debug, PartialEq)]
struct Diagram {
    ring: Ring,
    covariant: bool,
    ranks: BTreeMap<Key, usize>,
    maps: BTreeMap<(Key, Key), Matrix>,
}

impl Diagram {
    fn build(
        x: &SimplicialComplex,
        ring: Ring,
        covariant: bool,
        rank: impl Fn(&Simplex) -> usize,
        given: impl Fn(&Simplex, &Simplex) -> Option<Matrix>,
    ) -> Result<Self> {
        let mut d = Diagram {
            ring,
            covariant,
            ranks: x.all_simplices().map(|s| (key(s), rank(s))).collect(),
            maps: BTreeMap::new(),
        };
        for t in x.all_simplices() {
            let mut faces: Vec<Simplex> = t.faces().into_iter().filter(|s| s.len() < t.len()).collect();
            faces.sort_by_key(|s| std::cmp::Reverse(s.len()));
            for s in faces {
                let shape = d.shape(&s, t);
                let m = match given(&s, t) {
                    Some(m) => m.reduced(ring),
                    None if s.len() + 1 == t.len() => Matrix::zeros(shape.0, shape.1),
                    None => {
                        let v = t.vertices().iter().position(|v| !s.contains_vertex(*v)).expect("proper face");
                        d.composite(&s, &t.face(v), t)
                    }
                };
                if (m.rows(), m.cols()) != shape {
                    return Err(Error::Shape(format!(
                        "structure map {} - {} is {}x{}, expected {}x{}",
                        x.display(&s),
                        x.display(t),
                        m.rows(),
                        m.cols(),
                        shape.0,
                        shape.1
                    )));
                }
                d.maps.insert((key(&s), key(t)), m);
            }
        }
        d.check_functorial(x)?;
        Ok(d)
    }

    fn rank(&self, s: &Simplex) -> usize {
        self.ranks.get(&key(s)).copied().unwrap_or(0)
    }

    fn shape(&self, s: &Simplex, t: &Simplex) -> (usize, usize) {
        let (rs, rt) = (self.rank(s), self.rank(t));
        if self.covariant {
            (rt, rs)
        } else {
            (rs, rt)
        }
    }

    /// The map between `s ≤ t` in the functor's direction.
    fn map(&self, s: &Simplex, t: &Simplex) -> Matrix {
        if key(s) == key(t) {
            return Matrix::identity(self.rank(s));
        }
        self.maps
            .get(&(key(s), key(t)))
            .cloned()
            .unwrap_or_else(|| panic!("no structure map for {s:?} < {t:?}"))
    }

    /// The map for `s < t` through the intermediate face `r`.
    fn composite(&self, s: &Simplex, r: &Simplex, t: &Simplex) -> Matrix {
        if self.covariant {
            self.map(r, t).mul(&self.map(s, r), self.ring)
        } else {
            self.map(s, r).mul(&self.map(r, t), self.ring)
        }
    }

    fn check_functorial(&self, x: &SimplicialComplex) -> Result<()> {
        for t in x.all_simplices() {
            for r in t.faces() {
                for s in r.faces() {
                    if s.len() < r.len() && r.len() < t.len() && self.composite(&s, &r, t) != self.map(&s, t) {
                        return Err(Error::NotFunctorial(format!(
                            "{} < {} < {}",
                            x.display(&s),
                            x.display(&r),
                            x.display(t)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// A covariant functor from the face poset: `F(σ < τ) : F(σ) → F(τ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CombinatorialSheaf(Diagram);

/// A contravariant functor from the face poset: `G(τ > σ) : G(τ) → G(σ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CombinatorialCosheaf(Diagram);

impl CombinatorialSheaf {
    /// `map(σ, τ)` may supply `F(σ < τ)` for any proper face pair; missing
    /// codimension-one maps are zero and longer ones are composed.
    pub fn new(
        x: &SimplicialComplex,
        ring: Ring,
        rank: impl Fn(&Simplex) -> usize,
        map: impl Fn(&Simplex, &Simplex) -> Option<Matrix>,
    ) -> Result<Self> {
        Diagram::build(x, ring, true, rank, map).map(CombinatorialSheaf)
    }

    pub fn constant(x: &SimplicialComplex, ring: Ring) -> Self {
        Self::new(x, ring, |_| 1, |_, _| Some(Matrix::identity(1))).expect("constant sheaf")
    }

    pub fn ring(&self) -> Ring {
        self.0.ring
    }

    pub fn rank(&self, s: &Simplex) -> usize {
        self.0.rank(s)
    }

    /// `F(σ ≤ τ)`.
    pub fn map(&self, s: &Simplex, t: &Simplex) -> Matrix {
        self.0.map(s, t)
    }
}

impl CombinatorialCosheaf {
    /// `map(σ, τ)` may supply `G(τ > σ)` for any proper face pair `σ < τ`.
    pub fn new(
        x: &SimplicialComplex,
        ring: Ring,
        rank: impl Fn(&Simplex) -> usize,
        map: impl Fn(&Simplex, &Simplex) -> Option<Matrix>,
    ) -> Result<Self> {
        Diagram::build(x, ring, false, rank, map).map(CombinatorialCosheaf)
    }

    pub fn constant(x: &SimplicialComplex, ring: Ring) -> Self {
        Self::new(x, ring, |_| 1, |_, _| Some(Matrix::identity(1))).expect("constant cosheaf")
    }

    pub fn ring(&self) -> Ring {
        self.0.ring
    }

    pub fn rank(&self, s: &Simplex) -> usize {
        self.0.rank(s)
    }

    /// `G(τ ≥ σ)`, taking the argument pair in the order `(σ, τ)`.
    pub fn map(&self, s: &Simplex, t: &Simplex) -> Matrix {
        self.0.map(s, t)
    }
}

/// Compactly supported and plain cochains coincide on finite complexes; the
/// flag only names the variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Support {
    Plain,
    Compact,
}

/// Finite and locally finite chains coincide on finite complexes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Finite,
    LocallyFinite,
}

/// A complex whose basis is indexed by stalk vectors.
#[derive(Clone, Debug)]
pub struct StalkChains {
    pub basis: Graded<StalkGen>,
    pub complex: ChainComplex,
}

impl StalkChains {
    pub fn vector(&self, k: i32, c: &Chain<StalkGen>) -> Vec<Scalar> {
        c.to_vector(self.basis.at(k))
    }

    pub fn chain(&self, k: i32, v: &[Scalar]) -> Chain<StalkGen> {
        Chain::from_vector(self.basis.at(k), v)
    }
}

fn stalk_basis(x: &SimplicialComplex, region: &Region, rank: impl Fn(&Simplex) -> usize, degree: impl Fn(isize) -> i32) -> Graded<StalkGen> {
    let mut basis = Graded::new();
    for k in 0..=x.dim() {
        for s in region.simplices(x, k) {
            for a in 0..rank(s) {
                basis.insert(degree(k), (s.clone(), a));
            }
        }
    }
    basis
}

/// Cofacets `ρ` of `s` with the index `i` such that `ρ_⟨i⟩ = s`.
fn cofacets<'a>(x: &'a SimplicialComplex, s: &'a Simplex) -> impl Iterator<Item = (usize, &'a Simplex)> + 'a {
    x.cofaces_of_dim(s, s.dim() + 1).map(move |rho| {
        let i = (0..rho.len()).find(|&i| !s.contains_vertex(rho.vertex(i))).expect("cofacet");
        (i, rho)
    })
}

/// `(δφ)_σ = Σ (−1)^i F(σ_⟨i⟩ < σ) φ_{σ_⟨i⟩}`, with `C^l` in degree `-l`.
pub fn sheaf_cochain_complex(x: &SimplicialComplex, f: &CombinatorialSheaf, region: &Region, _support: Support) -> Result<StalkChains> {
    let basis = stalk_basis(x, region, |s| f.rank(s), |k| -(k as i32));
    let outside = if matches!(region, Region::Sub(_)) { Outside::Drop } else { Outside::Forbid };
    let complex = build_complex(f.ring(), &basis, outside, |(t, a)| {
        let mut out = Chain::new();
        for (i, rho) in cofacets(x, t) {
            let m = f.map(t, rho);
            for (r, c) in m.column(*a).into_iter().enumerate() {
                out.add_term((rho.clone(), r), c * int(sign(i)));
            }
        }
        out
    })?;
    Ok(StalkChains { basis, complex })
}

/// `∂(σ ⊗ ψ) = Σ (−1)^j σ_⟨j⟩ ⊗ G(σ > σ_⟨j⟩)ψ`.
pub fn cosheaf_chain_complex(x: &SimplicialComplex, g: &CombinatorialCosheaf, region: &Region, _variant: Variant) -> Result<StalkChains> {
    let basis = stalk_basis(x, region, |s| g.rank(s), |k| k as i32);
    let outside = if region.is_relative() { Outside::Drop } else { Outside::Forbid };
    let complex = build_complex(g.ring(), &basis, outside, |(t, a)| {
        let mut out = Chain::new();
        if t.len() > 1 {
            for (j, face) in t.boundary_faces() {
                let m = g.map(&face, t);
                for (r, c) in m.column(*a).into_iter().enumerate() {
                    out.add_term((face.clone(), r), c * int(sign(j)));
                }
            }
        }
        out
    })?;
    Ok(StalkChains { basis, complex })
}

/// Global sections over a full subcomplex, computed on vertices.
#[derive(Clone, Debug)]
pub struct Sections {
    /// Vertex values of a basis of `Γ(L; F)`.
    pub basis: Vec<Chain<StalkGen>>,
    /// `H^0(L; F|_L)`.
    pub h0: HomologyPresentation,
    /// The basis has invertible coordinates in `h0`.
    pub comparison_is_iso: bool,
}

impl Sections {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

pub fn sections(x: &SimplicialComplex, f: &CombinatorialSheaf, l: &Subcomplex) -> Result<Sections> {
    let ring = f.ring();
    let c = sheaf_cochain_complex(x, f, &Region::Sub(l.clone()), Support::Plain)?;
    let d0 = c.complex.differential(0);
    let s = smith_normal_form(&d0, ring);
    let n = c.complex.rank(0);
    let kernel = s.v.col_block(s.rank()..n);
    let basis: Vec<Chain<StalkGen>> = (0..kernel.cols()).map(|j| c.chain(0, &kernel.column(j))).collect();
    let h0 = c.complex.cohomology(0);
    let coords: Vec<Vec<Scalar>> = (0..kernel.cols())
        .map(|j| h0.coordinates(&kernel.column(j)).expect("sections are cocycles"))
        .collect();
    let comparison_is_iso = h0.torsion.is_empty() && is_invertible(&Matrix::from_columns(h0.len(), &coords), ring);
    Ok(Sections {
        basis,
        h0,
        comparison_is_iso,
    })
}

/// Values of a section on every simplex of `L`, from its vertex values.
/// Fails if two vertices of a simplex disagree.
pub fn extend_section(x: &SimplicialComplex, f: &CombinatorialSheaf, l: &Subcomplex, s: &Chain<StalkGen>) -> Result<Chain<StalkGen>> {
    let ring = f.ring();
    let vertex_value = |v: &Simplex| -> Vec<Scalar> { (0..f.rank(v)).map(|a| s.coefficient(&(v.clone(), a))).collect() };
    let mut out = Chain::new();
    for k in 0..=x.dim() {
        for t in l.simplices(x, k) {
            let mut value: Option<Vec<Scalar>> = None;
            for &v in t.vertices() {
                let vs = x.simplex(&[v]).expect("vertex");
                let image = f.map(&vs, t).apply(&vertex_value(&vs), ring);
                match &value {
                    None => value = Some(image),
                    Some(prev) if *prev != image => {
                        return Err(Error::Hypothesis(format!("section disagrees on {}", x.display(t))));
                    }
                    Some(_) => {}
                }
            }
            for (a, c) in value.unwrap_or_default().into_iter().enumerate() {
                if !c.is_zero() {
                    out.add_term((t.clone(), a), c);
                }
            }
        }
    }
    Ok(out)
}

/// `φ_σ ↦ sg(σ) φ_σ` from the sheaf cochains of `x` to those of `y`, the
/// same complex with another orientation.
pub fn reorientation_iso(x: &SimplicialComplex, y: &SimplicialComplex, f: &CombinatorialSheaf, region: &Region) -> Result<ChainMap> {
    let src = sheaf_cochain_complex(x, f, region, Support::Plain)?;
    let tgt = sheaf_cochain_complex(y, f, region, Support::Plain)?;
    build_map((&src.basis, &src.complex), (&tgt.basis, &tgt.complex), Outside::Forbid, |(s, a)| {
        Chain::term((y.orient(s), *a), int(y.permutation_sign(s)))
    })
}

/// Cosheaf version of [`reorientation_iso`].
pub fn cosheaf_reorientation_iso(x: &SimplicialComplex, y: &SimplicialComplex, g: &CombinatorialCosheaf, region: &Region) -> Result<ChainMap> {
    let src = cosheaf_chain_complex(x, g, region, Variant::Finite)?;
    let tgt = cosheaf_chain_complex(y, g, region, Variant::Finite)?;
    build_map((&src.basis, &src.complex), (&tgt.basis, &tgt.complex), Outside::Forbid, |(s, a)| {
        Chain::term((y.orient(s), *a), int(y.permutation_sign(s)))
    })
}
