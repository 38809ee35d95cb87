//! Local (co)homology `h_*(σ) = H_*(X, X − st̊σ)` on `σ▹α` generators.

mod cm;
mod stalks;

use std::collections::BTreeMap;

pub use cm::{cm_check, CmReport, Witness};
pub use stalks::{HCosheaf, HSheaf, HStalk, QStalk};

use crate::algebra::{is_invertible, ChainComplex, HomologyPresentation, Matrix, Ring, Scalar};
use crate::chain::{build_complex, Chain, Graded, Outside};
use crate::complex::{sign, Gen, Simplex, SimplicialComplex};
use crate::simplicial::{augmented_boundary, reduced_chains};
use crate::{Error, Result};

/// `∂(σ▹α) = Σ (−1)^j σ▹α_⟨j⟩`, dropping faces that miss `σ`.
pub fn local_boundary(g: &Gen) -> Chain<Gen> {
    let mut out = Chain::new();
    for (j, f) in g.over.boundary_faces() {
        if g.under.is_face_of(&f) && !f.is_empty() {
            out.add_signed(Gen { under: g.under.clone(), over: f }, sign(j));
        }
    }
    out
}

/// `δ(σ▹α^*) = Σ (−1)^i σ▹ρ^*` over cofacets `ρ` with `ρ_⟨i⟩ = α`.
pub fn local_coboundary(x: &SimplicialComplex, g: &Gen) -> Chain<Gen> {
    let mut out = Chain::new();
    for rho in x.cofaces_of_dim(&g.over, g.over.dim() + 1) {
        let i = (0..rho.len()).find(|&i| !g.over.contains_vertex(rho.vertex(i))).expect("cofacet");
        out.add_signed(Gen { under: g.under.clone(), over: rho.clone() }, sign(i));
    }
    out
}

/// `C_*(X, X − st̊σ)` (or its cochains, with `C^k` in degree `-k`).
#[derive(Clone, Debug)]
pub struct LocalComplex {
    pub simplex: Simplex,
    pub basis: Graded<Gen>,
    pub complex: ChainComplex,
}

fn local_basis(x: &SimplicialComplex, s: &Simplex, degree: impl Fn(isize) -> i32) -> Result<Graded<Gen>> {
    if s.is_empty() {
        return Err(Error::Hypothesis("local homology at the empty simplex is reduced homology".into()));
    }
    if !x.contains(s) {
        return Err(Error::NotInComplex(x.display(s)));
    }
    let mut basis = Graded::new();
    for a in x.cofaces(s) {
        basis.insert(degree(a.dim()), Gen { under: s.clone(), over: a.clone() });
    }
    Ok(basis)
}

pub fn local_chains(x: &SimplicialComplex, s: &Simplex, ring: Ring) -> Result<LocalComplex> {
    let basis = local_basis(x, s, |k| k as i32)?;
    let complex = build_complex(ring, &basis, Outside::Forbid, local_boundary)?;
    Ok(LocalComplex {
        simplex: s.clone(),
        basis,
        complex,
    })
}

pub fn local_cochains(x: &SimplicialComplex, s: &Simplex, ring: Ring) -> Result<LocalComplex> {
    let basis = local_basis(x, s, |k| -(k as i32))?;
    let complex = build_complex(ring, &basis, Outside::Forbid, |g| local_coboundary(x, g))?;
    Ok(LocalComplex {
        simplex: s.clone(),
        basis,
        complex,
    })
}

pub fn local_homology(x: &SimplicialComplex, s: &Simplex, k: i32, ring: Ring) -> Result<HomologyPresentation> {
    Ok(local_chains(x, s, ring)?.complex.homology(k))
}

pub fn local_cohomology(x: &SimplicialComplex, s: &Simplex, k: i32, ring: Ring) -> Result<HomologyPresentation> {
    Ok(local_cochains(x, s, ring)?.complex.cohomology(k))
}

/// `H̃_*(X)` for `k = -1..=dim X`.
pub fn reduced_homology(x: &SimplicialComplex, ring: Ring) -> Result<BTreeMap<i32, HomologyPresentation>> {
    let c = reduced_chains(x, ring)?.complex;
    Ok((-1..=x.dim() as i32).map(|k| (k, c.homology(k))).collect())
}

/// Augmented chains of `lk σ`, with `H̃_{-1}(∅) = R`.
fn link_reduced(x: &SimplicialComplex, s: &Simplex, ring: Ring) -> Result<ChainComplex> {
    let mut basis = Graded::new();
    basis.insert(-1, Simplex::empty());
    for t in x.link(s)? {
        basis.insert(t.dim() as i32, t);
    }
    build_complex(ring, &basis, Outside::Forbid, augmented_boundary)
}

fn same_group(a: &HomologyPresentation, b: &HomologyPresentation) -> bool {
    a.free_rank == b.free_rank && a.torsion == b.torsion
}

/// `h_i(σ) ≅ H̃_{i−l−1}(lk σ)` for every `i`, with `l = dim σ`.
pub fn link_crosscheck(x: &SimplicialComplex, s: &Simplex, ring: Ring) -> Result<bool> {
    let local = local_chains(x, s, ring)?.complex;
    let link = link_reduced(x, s, ring)?;
    let l = s.dim() as i32;
    Ok((0..=x.dim() as i32 + 1).all(|i| same_group(&local.homology(i), &link.homology(i - l - 1))))
}

/// Outcome of comparing `h^n(σ)` with the dual of `h_n(σ)`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct UctCheck {
    pub rank_homology: usize,
    pub rank_cohomology: usize,
    pub torsion_free: bool,
    pub perfect_pairing: bool,
}

impl UctCheck {
    pub fn holds(&self) -> bool {
        self.torsion_free && self.rank_homology == self.rank_cohomology && self.perfect_pairing
    }
}

/// Evaluates cocycle representatives of `h^n(σ)` on cycle representatives of
/// `h_n(σ)` and tests the pairing matrix for invertibility.
pub fn uct_check(x: &SimplicialComplex, s: &Simplex, n: i32, ring: Ring) -> Result<UctCheck> {
    let chains = local_chains(x, s, ring)?;
    let cochains = local_cochains(x, s, ring)?;
    let h = chains.complex.homology(n);
    let c = cochains.complex.cohomology(n);
    let torsion_free = h.torsion.is_empty() && c.torsion.is_empty();
    let (hb, cb) = (chains.basis.at(n), cochains.basis.at(-n));
    let mut pairing = Matrix::zeros(c.len(), h.len());
    for (i, phi) in c.generators().iter().enumerate() {
        let phi = Chain::from_vector(cb, phi);
        for (j, z) in h.generators().iter().enumerate() {
            let z = Chain::from_vector(hb, z);
            pairing.set(i, j, ring.reduce(&evaluate(&phi, &z)));
        }
    }
    Ok(UctCheck {
        rank_homology: h.free_rank,
        rank_cohomology: c.free_rank,
        torsion_free,
        perfect_pairing: torsion_free && is_invertible(&pairing, ring),
    })
}

/// `⟨β^*, γ⟩ = δ_{β,γ}` extended bilinearly.
pub fn evaluate(phi: &Chain<Gen>, z: &Chain<Gen>) -> Scalar {
    phi.iter().map(|(g, a)| a * z.coefficient(g)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::fixtures;

    fn s(x: &SimplicialComplex, ids: &[&str]) -> Simplex {
        x.simplex_by_labels(ids).unwrap()
    }

    #[test]
    fn vertex_of_circle() {
        let x = fixtures::c3();
        let z = Ring::Integers;
        let v = s(&x, &["0"]);
        let h1 = local_homology(&x, &v, 1, z).unwrap();
        assert_eq!((h1.free_rank, h1.torsion.len()), (1, 0));
        let lc = local_chains(&x, &v, z).unwrap();
        let mut expected = Chain::unit(Gen::new(v.clone(), s(&x, &["0", "1"])).unwrap());
        expected.add_signed(Gen::new(v.clone(), s(&x, &["0", "2"])).unwrap(), -1);
        let vec = expected.to_vector(lc.basis.at(1));
        assert!(lc.complex.is_cycle(1, &vec));
        assert_eq!(h1.coordinates(&vec).unwrap().len(), 1);
        assert!(h1.coordinates(&vec).unwrap()[0] == int(1) || h1.coordinates(&vec).unwrap()[0] == int(-1));
        assert!(local_homology(&x, &v, 0, z).unwrap().is_zero());
    }

    #[test]
    fn bowtie_pinch() {
        let x = fixtures::bowtie();
        let v = s(&x, &["0"]);
        let z = Ring::Integers;
        assert!(local_homology(&x, &v, 2, z).unwrap().is_zero());
        assert_eq!(local_homology(&x, &v, 1, z).unwrap().free_rank, 1);
        assert!(link_crosscheck(&x, &v, z).unwrap());
    }

    #[test]
    fn maximal_simplices_have_rank_one_top_homology() {
        for (name, x) in fixtures::all() {
            for a in x.maximal_simplices() {
                let h = local_homology(&x, &a, a.dim() as i32, Ring::Integers).unwrap();
                assert_eq!((h.free_rank, h.torsion.len()), (1, 0), "{name}");
            }
        }
    }

    #[test]
    fn vanishing_below_dimension() {
        for (_, x) in fixtures::all() {
            for t in x.all_simplices() {
                let c = local_chains(&x, t, Ring::Integers).unwrap().complex;
                for k in 0..t.dim() as i32 {
                    assert!(c.homology(k).is_zero());
                }
                let maximal = x.cofaces(t).len() == 1;
                assert_eq!(c.homology(t.dim() as i32).is_zero(), !maximal);
            }
        }
    }

    #[test]
    fn munkres_on_examples() {
        let z = Ring::Integers;
        let c3 = fixtures::c3();
        assert!(link_crosscheck(&c3, &s(&c3, &["0"]), z).unwrap());
        let t4 = fixtures::t4();
        let e = s(&t4, &["0", "1"]);
        assert_eq!(local_homology(&t4, &e, 2, z).unwrap().free_rank, 1);
        assert!(link_crosscheck(&t4, &e, z).unwrap());
        let rp = fixtures::rp6();
        for v in rp.simplices(0) {
            assert_eq!(local_homology(&rp, v, 2, z).unwrap().free_rank, 1);
            assert!(link_crosscheck(&rp, v, z).unwrap());
        }
    }

    #[test]
    fn reduced_homology_examples() {
        let z = Ring::Integers;
        let c3 = reduced_homology(&fixtures::c3(), z).unwrap();
        assert!(c3.iter().all(|(k, h)| (*k == 1) == !h.is_zero()));
        let t4 = reduced_homology(&fixtures::t4(), z).unwrap();
        assert!(t4.iter().all(|(k, h)| (*k == 2) == !h.is_zero()));
        assert!(reduced_homology(&fixtures::point(), z).unwrap().values().all(HomologyPresentation::is_zero));
    }

    #[test]
    fn uct_examples() {
        let z = Ring::Integers;
        let t4 = fixtures::t4();
        for v in t4.simplices(0) {
            let u = uct_check(&t4, v, 2, z).unwrap();
            assert!(u.holds());
            assert_eq!(u.rank_homology, 1);
        }
        let c3 = fixtures::c3();
        assert!(uct_check(&c3, &s(&c3, &["1", "2"]), 1, z).unwrap().holds());
        let rp = fixtures::rp6();
        assert!(rp.simplices(0).iter().all(|v| uct_check(&rp, v, 2, z).unwrap().holds()));
    }

    #[test]
    fn empty_simplex_is_rejected() {
        let x = fixtures::c3();
        assert!(local_chains(&x, &Simplex::empty(), Ring::Integers).is_err());
    }
}
