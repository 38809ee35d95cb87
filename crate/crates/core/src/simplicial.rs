//! Simplicial chains and cochains with constant coefficients.

use crate::algebra::{ChainComplex, Ring};
use crate::chain::{build_complex, Chain, Graded, Outside};
use crate::complex::{sign, Region, Simplex, SimplicialComplex};
use crate::Result;

/// `∂σ = Σ (−1)^j σ_⟨j⟩`, omitting the empty face.
pub fn boundary(s: &Simplex) -> Chain<Simplex> {
    let mut out = Chain::new();
    if s.len() > 1 {
        for (j, f) in s.boundary_faces() {
            out.add_signed(f, sign(j));
        }
    }
    out
}

/// `∂σ` including the empty face of a vertex (augmented complex).
pub fn augmented_boundary(s: &Simplex) -> Chain<Simplex> {
    let mut out = Chain::new();
    for (j, f) in s.boundary_faces() {
        out.add_signed(f, sign(j));
    }
    out
}

/// `δσ^* = Σ (−1)^i ρ^*` over the cofacets ρ with `ρ_⟨i⟩ = σ`.
pub fn coboundary(x: &SimplicialComplex, s: &Simplex) -> Chain<Simplex> {
    let mut out = Chain::new();
    for rho in x.cofaces_of_dim(s, s.dim() + 1) {
        let i = (0..rho.len()).find(|&i| !s.contains_vertex(rho.vertex(i))).expect("cofacet");
        out.add_signed(rho.clone(), sign(i));
    }
    out
}

/// A complex together with the simplices indexing its bases.
#[derive(Clone, Debug)]
pub struct Chains {
    pub basis: Graded<Simplex>,
    pub complex: ChainComplex,
}

fn region_basis(x: &SimplicialComplex, region: &Region, degree: impl Fn(isize) -> i32) -> Graded<Simplex> {
    let mut basis = Graded::new();
    for k in 0..=x.dim() {
        for s in region.simplices(x, k) {
            basis.insert(degree(k), s.clone());
        }
    }
    basis
}

/// `C_*(X)`, `C_*(L)` or `C_*(X, L)`.
pub fn chains(x: &SimplicialComplex, region: &Region, ring: Ring) -> Result<Chains> {
    let basis = region_basis(x, region, |k| k as i32);
    let outside = if region.is_relative() { Outside::Drop } else { Outside::Forbid };
    let complex = build_complex(ring, &basis, outside, boundary)?;
    Ok(Chains { basis, complex })
}

/// `C^*(X)`, `C^*(L)` or `C^*(X, L)`, with `C^l` stored in degree `-l`.
pub fn cochains(x: &SimplicialComplex, region: &Region, ring: Ring) -> Result<Chains> {
    let basis = region_basis(x, region, |k| -(k as i32));
    let outside = if matches!(region, Region::Sub(_)) { Outside::Drop } else { Outside::Forbid };
    let complex = build_complex(ring, &basis, outside, |s| coboundary(x, s))?;
    Ok(Chains { basis, complex })
}

/// The augmented chain complex, with the empty simplex in degree −1.
pub fn reduced_chains(x: &SimplicialComplex, ring: Ring) -> Result<Chains> {
    let mut basis = region_basis(x, &Region::Whole, |k| k as i32);
    if x.vertex_count() > 0 {
        basis.insert(-1, Simplex::empty());
    }
    let complex = build_complex(ring, &basis, Outside::Forbid, augmented_boundary)?;
    Ok(Chains { basis, complex })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::complex::Subcomplex;
    use crate::fixtures;

    #[test]
    fn classical_homology() {
        let z = Ring::Integers;
        let c3 = chains(&fixtures::c3(), &Region::Whole, z).unwrap().complex;
        assert_eq!(c3.homology(1).free_rank, 1);
        let rp = chains(&fixtures::rp6(), &Region::Whole, z).unwrap().complex;
        assert_eq!(rp.homology(1).free_rank, 0);
        assert_eq!(rp.homology(1).torsion, vec![int(2)]);
        assert!(rp.homology(2).is_zero());
        let f2 = chains(&fixtures::rp6(), &Region::Whole, Ring::PrimeField(2)).unwrap().complex;
        assert_eq!((0..3).map(|k| f2.homology(k).free_rank).collect::<Vec<_>>(), vec![1, 1, 1]);
    }

    #[test]
    fn cohomology_of_circle_and_edge() {
        let c = cochains(&fixtures::c3(), &Region::Whole, Ring::Integers).unwrap();
        assert_eq!(c.complex.cohomology(0).free_rank, 1);
        assert_eq!(c.complex.cohomology(1).free_rank, 1);
        let e = cochains(&fixtures::edge(), &Region::Whole, Ring::Integers).unwrap();
        assert_eq!(e.complex.differential(0).to_dense(), vec![vec![int(-1), int(1)]]);
    }

    #[test]
    fn relative_to_everything_is_zero() {
        let x = fixtures::t4();
        let all = Region::Relative(Subcomplex::whole(&x));
        assert!(chains(&x, &all, Ring::Integers).unwrap().complex.degrees().is_empty());
    }

    #[test]
    fn reduced_homology_of_fixtures() {
        let z = Ring::Integers;
        let t4 = reduced_chains(&fixtures::t4(), z).unwrap().complex;
        assert!(t4.homology(0).is_zero());
        assert_eq!(t4.homology(2).free_rank, 1);
        let p = reduced_chains(&fixtures::point(), z).unwrap().complex;
        assert!((-1..=0).all(|k| p.homology(k).is_zero()));
    }
}
