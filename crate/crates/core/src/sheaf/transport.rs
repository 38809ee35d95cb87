//! Transport of generator-indexed matrices along (co)sheaves.

use indexmap::IndexSet;

use super::{CombinatorialCosheaf, CombinatorialSheaf};
use crate::algebra::{Matrix, Ring, Scalar};
use crate::chain::{matrix_of, Chain, Outside};
use crate::complex::{Gen, Simplex};
use crate::{Error, Result};

/// A morphism between free modules on `σ▹α` symbols: integer entries, columns
/// indexed by `source`. Unstarred morphisms (category `𝒞(X)`) only move
/// `σ▹α` to `τ▹β` with `β ≤ α`; starred ones (`𝒞*(X)`, symbols `σ▹α^*`)
/// need `α ≤ β`.
#[derive(Clone, Debug, PartialEq)]
pub struct Morphism {
    source: IndexSet<Gen>,
    target: IndexSet<Gen>,
    matrix: Matrix,
    starred: bool,
}

fn offsets(basis: &IndexSet<Gen>, rank: impl Fn(&Simplex) -> usize) -> Vec<usize> {
    let mut out = vec![0];
    for g in basis {
        out.push(out.last().expect("nonempty") + rank(&g.over));
    }
    out
}

/// Places `block` into `m` with its corner at `(r, c)`, scaled by `coef`.
fn add_block(m: &mut Matrix, r: usize, c: usize, block: &Matrix, coef: &Scalar) {
    for (i, j, v) in block.entries() {
        m.add_to(r + i, c + j, &(v * coef));
    }
}

impl Morphism {
    pub fn new(source: IndexSet<Gen>, target: IndexSet<Gen>, matrix: Matrix, starred: bool) -> Result<Self> {
        if (matrix.rows(), matrix.cols()) != (target.len(), source.len()) {
            return Err(Error::Shape(format!(
                "morphism matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.len(),
                source.len()
            )));
        }
        for (i, j, v) in matrix.entries() {
            let (a, b) = (&source[j].over, &target[i].over);
            let ok = if starred { a.is_face_of(b) } else { b.is_face_of(a) };
            if !v.is_integer() || !ok {
                return Err(Error::Inadmissible(format!("{:?} -> {:?}", source[j], target[i])));
            }
        }
        Ok(Morphism {
            source,
            target,
            matrix,
            starred,
        })
    }

    pub fn from_fn(source: IndexSet<Gen>, target: IndexSet<Gen>, starred: bool, f: impl Fn(&Gen) -> Chain<Gen>) -> Result<Self> {
        let matrix = matrix_of(Ring::Integers, &source, &target, Outside::Forbid, f);
        Self::new(source, target, matrix, starred)
    }

    pub fn identity(basis: IndexSet<Gen>, starred: bool) -> Self {
        let n = basis.len();
        Morphism {
            source: basis.clone(),
            target: basis,
            matrix: Matrix::identity(n),
            starred,
        }
    }

    pub fn source(&self) -> &IndexSet<Gen> {
        &self.source
    }

    pub fn target(&self) -> &IndexSet<Gen> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &Morphism) -> Result<Morphism> {
        if first.target != self.source || first.starred != self.starred {
            return Err(Error::Shape("morphisms are not composable".into()));
        }
        let matrix = self.matrix.mul(&first.matrix, Ring::Integers);
        Morphism::new(first.source.clone(), self.target.clone(), matrix, self.starred)
    }

    fn require(&self, starred: bool) -> Result<()> {
        if self.starred == starred {
            Ok(())
        } else {
            Err(Error::Inadmissible("morphism lives in the other category".into()))
        }
    }

    /// `f_G : σ▹ψ_α ↦ Σ f τ▹G(α > β)ψ_α`.
    pub fn g_transport(&self, g: &CombinatorialCosheaf) -> Result<Matrix> {
        self.require(false)?;
        let rank = |s: &Simplex| g.rank(s);
        let (rs, rt) = (offsets(&self.source, rank), offsets(&self.target, rank));
        let mut m = Matrix::zeros(rt[self.target.len()], rs[self.source.len()]);
        for (i, j, c) in self.matrix.entries() {
            add_block(&mut m, rt[i], rs[j], &g.map(&self.target[i].over, &self.source[j].over), c);
        }
        Ok(m.reduced(g.ring()))
    }

    /// `f^F : τ▹φ^β ↦ Σ f σ▹F(β < α)φ^β`, from the target side to the source side.
    pub fn f_dual(&self, f: &CombinatorialSheaf) -> Result<Matrix> {
        self.require(false)?;
        let rank = |s: &Simplex| f.rank(s);
        let (rs, rt) = (offsets(&self.source, rank), offsets(&self.target, rank));
        let mut m = Matrix::zeros(rs[self.source.len()], rt[self.target.len()]);
        for (i, j, c) in self.matrix.entries() {
            add_block(&mut m, rs[j], rt[i], &f.map(&self.target[i].over, &self.source[j].over), c);
        }
        Ok(m.reduced(f.ring()))
    }

    /// `f_F : σ▹φ_α ↦ Σ f τ▹F(α < β)φ_α` on a starred morphism.
    pub fn f_transport(&self, f: &CombinatorialSheaf) -> Result<Matrix> {
        self.require(true)?;
        let rank = |s: &Simplex| f.rank(s);
        let (rs, rt) = (offsets(&self.source, rank), offsets(&self.target, rank));
        let mut m = Matrix::zeros(rt[self.target.len()], rs[self.source.len()]);
        for (i, j, c) in self.matrix.entries() {
            add_block(&mut m, rt[i], rs[j], &f.map(&self.source[j].over, &self.target[i].over), c);
        }
        Ok(m.reduced(f.ring()))
    }
}

/// Row/column labels of a transported module: `(symbol, stalk index)`.
pub fn transported_basis(basis: &IndexSet<Gen>, rank: impl Fn(&Simplex) -> usize) -> IndexSet<(Gen, usize)> {
    basis
        .iter()
        .flat_map(|g| (0..rank(&g.over)).map(move |a| (g.clone(), a)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::fixtures;
    use crate::simplicial::boundary;

    fn plain(x: &crate::complex::SimplicialComplex, k: isize) -> IndexSet<Gen> {
        x.simplices(k).iter().cloned().map(Gen::plain).collect()
    }

    #[test]
    fn identity_transports_to_identity() {
        let x = fixtures::triangle();
        let g = CombinatorialCosheaf::new(&x, Ring::Integers, |s| s.len(), |_, _| None).unwrap();
        let id = Morphism::identity(plain(&x, 1), false);
        assert_eq!(id.g_transport(&g).unwrap(), Matrix::identity(6));
    }

    #[test]
    fn constant_transport_of_boundary() {
        let x = fixtures::c3();
        let d = Morphism::from_fn(plain(&x, 1), plain(&x, 0), false, |g| boundary(&g.over).map(|s| Chain::unit(Gen::plain(s.clone()))))
            .unwrap();
        let z = Ring::Integers;
        let g = CombinatorialCosheaf::constant(&x, z);
        assert_eq!(d.g_transport(&g).unwrap(), *d.matrix());
        let f = CombinatorialSheaf::constant(&x, z);
        assert_eq!(d.f_dual(&f).unwrap(), d.matrix().transpose());
    }

    #[test]
    fn rejects_inadmissible_entries() {
        let x = fixtures::c3();
        let up = Morphism::new(plain(&x, 0), plain(&x, 1), Matrix::from_ints(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]), false);
        assert!(matches!(up, Err(Error::Inadmissible(_))));
        let half = Matrix::from_dense(1, 1, &[vec![int(1) / int(2)]]);
        let v: IndexSet<Gen> = plain(&x, 0).into_iter().take(1).collect();
        assert!(Morphism::new(v.clone(), v, half, false).is_err());
    }
}
