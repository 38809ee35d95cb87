//! `h_n` and `h^n` as combinatorial (co)sheaves with chain-level stalks.

use std::collections::BTreeMap;

use indexmap::IndexSet;
use num_traits::Zero;
use rayon::prelude::*;

use super::{local_chains, local_cochains};
use crate::algebra::{smith_normal_form, Matrix, Ring, Scalar};
use crate::chain::Chain;
use crate::complex::{Gen, Simplex, SimplicialComplex};
use crate::sheaf::{CombinatorialCosheaf, CombinatorialSheaf};
use crate::{Error, Result};

/// Moves every generator to a new base simplex, dropping those whose top
/// simplex does not contain it.
pub fn reroot(c: &Chain<Gen>, under: &Simplex) -> Chain<Gen> {
    c.map(|g| match Gen::new(under.clone(), g.over.clone()) {
        Some(h) => Chain::unit(h),
        None => Chain::new(),
    })
}

/// `h_n(σ) = ker(d : C_n → C_{n-1})` inside `C_n(X, X − st̊σ)`, with a basis.
#[derive(Clone, Debug)]
pub struct HStalk {
    pub simplex: Simplex,
    gens: IndexSet<Gen>,
    basis: Matrix,
    coords: Matrix,
    boundary: Matrix,
    ring: Ring,
}

impl HStalk {
    fn build(x: &SimplicialComplex, s: &Simplex, n: i32, ring: Ring) -> Result<Self> {
        let lc = local_chains(x, s, ring)?;
        let gens = lc.basis.at(n).clone();
        let d = lc.complex.differential(n);
        let sn = smith_normal_form(&d, ring);
        let r = sn.rank();
        Ok(HStalk {
            simplex: s.clone(),
            basis: sn.v.col_block(r..gens.len()),
            coords: sn.v_inv.row_block(r..gens.len()),
            gens,
            boundary: d,
            ring,
        })
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    /// The generators `σ▹α` with `dim α = n`.
    pub fn generators(&self) -> &IndexSet<Gen> {
        &self.gens
    }

    pub fn basis_chain(&self, i: usize) -> Chain<Gen> {
        Chain::from_vector(&self.gens, &self.basis.column(i))
    }

    /// The cycle with the given coordinates.
    pub fn chain(&self, coords: &[Scalar]) -> Chain<Gen> {
        Chain::from_vector(&self.gens, &self.basis.apply(coords, self.ring))
    }

    /// Coordinates of a local cycle, `None` if `c` is not one.
    pub fn coordinates(&self, c: &Chain<Gen>) -> Option<Vec<Scalar>> {
        if c.support().any(|g| !self.gens.contains(g)) {
            return None;
        }
        let v = c.to_vector(&self.gens);
        if !self.boundary.apply(&v, self.ring).iter().all(Zero::is_zero) {
            return None;
        }
        Some(self.coords.apply(&v, self.ring))
    }
}

/// The local homology sheaf in top degree.
#[derive(Clone, Debug)]
pub struct HSheaf {
    n: i32,
    stalks: BTreeMap<Simplex, HStalk>,
    sheaf: CombinatorialSheaf,
}

impl HSheaf {
    /// Needs `n ≥ dim X`, so that cycles are homology classes.
    pub fn build(x: &SimplicialComplex, n: i32, ring: Ring) -> Result<Self> {
        if (n as isize) < x.dim() {
            return Err(Error::Hypothesis(format!("h_{n} stalks are cycle modules only for n ≥ dim X = {}", x.dim())));
        }
        let simplices: Vec<Simplex> = x.all_simplices().cloned().collect();
        let stalks = simplices
            .par_iter()
            .map(|s| HStalk::build(x, s, n, ring).map(|h| (s.clone(), h)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let sheaf = CombinatorialSheaf::new(
            x,
            ring,
            |s| stalks[s].rank(),
            |s, t| {
                let (a, b) = (&stalks[s], &stalks[&x.orient(t)]);
                let cols: Vec<Vec<Scalar>> = (0..a.rank())
                    .map(|i| b.coordinates(&reroot(&a.basis_chain(i), &b.simplex)).expect("restriction of a cycle"))
                    .collect();
                Some(Matrix::from_columns(b.rank(), &cols))
            },
        )?;
        Ok(HSheaf { n, stalks, sheaf })
    }

    pub fn degree(&self) -> i32 {
        self.n
    }

    pub fn stalk(&self, s: &Simplex) -> &HStalk {
        &self.stalks[s]
    }

    pub fn sheaf(&self) -> &CombinatorialSheaf {
        &self.sheaf
    }

    /// Chain-level value of a stalk vector.
    pub fn value(&self, s: &Simplex, a: usize) -> Chain<Gen> {
        self.stalks[s].basis_chain(a)
    }

    /// Expands a cochain with `h_n` values into `σ▹α` generators.
    pub fn expand(&self, c: &Chain<(Simplex, usize)>) -> Chain<Gen> {
        c.map(|(s, a)| self.value(s, *a))
    }
}

/// `h^n(σ) = C^n / im δ` of `C^*(X, X − st̊σ)`, with a projection and lifts.
#[derive(Clone, Debug)]
pub struct QStalk {
    pub simplex: Simplex,
    gens: IndexSet<Gen>,
    q: Matrix,
    lift: Matrix,
    ring: Ring,
}

impl QStalk {
    fn build(x: &SimplicialComplex, s: &Simplex, n: i32, ring: Ring) -> Result<Self> {
        let lc = local_cochains(x, s, ring)?;
        let gens = lc.basis.at(-n).clone();
        let delta = lc.complex.differential(-(n - 1));
        let sn = smith_normal_form(&delta, ring);
        if sn.diagonal.iter().any(|d| !ring.is_unit(d)) {
            return Err(Error::TorsionStalk(x.display(s)));
        }
        let r = sn.rank();
        Ok(QStalk {
            simplex: s.clone(),
            q: sn.u.row_block(r..gens.len()),
            lift: sn.u_inv.col_block(r..gens.len()),
            gens,
            ring,
        })
    }

    pub fn rank(&self) -> usize {
        self.q.rows()
    }

    pub fn generators(&self) -> &IndexSet<Gen> {
        &self.gens
    }

    /// Class of a cochain in `C^n(X, X − st̊σ)`; terms on other generators are ignored.
    pub fn project(&self, c: &Chain<Gen>) -> Vec<Scalar> {
        self.q.apply(&c.project(&self.gens), self.ring)
    }

    /// A cochain representing basis class `i`.
    pub fn lift(&self, i: usize) -> Chain<Gen> {
        Chain::from_vector(&self.gens, &self.lift.column(i))
    }
}

/// The local cohomology cosheaf in top degree.
#[derive(Clone, Debug)]
pub struct HCosheaf {
    n: i32,
    stalks: BTreeMap<Simplex, QStalk>,
    cosheaf: CombinatorialCosheaf,
}

impl HCosheaf {
    pub fn build(x: &SimplicialComplex, n: i32, ring: Ring) -> Result<Self> {
        if (n as isize) < x.dim() {
            return Err(Error::Hypothesis(format!("h^{n} stalks are cokernels only for n ≥ dim X = {}", x.dim())));
        }
        let simplices: Vec<Simplex> = x.all_simplices().cloned().collect();
        let stalks = simplices
            .par_iter()
            .map(|s| QStalk::build(x, s, n, ring).map(|h| (s.clone(), h)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        let cosheaf = CombinatorialCosheaf::new(
            x,
            ring,
            |s| stalks[s].rank(),
            |s, t| {
                let (small, big) = (&stalks[s], &stalks[&x.orient(t)]);
                let cols: Vec<Vec<Scalar>> = (0..big.rank())
                    .map(|i| small.project(&reroot(&big.lift(i), &small.simplex)))
                    .collect();
                Some(Matrix::from_columns(small.rank(), &cols))
            },
        )?;
        Ok(HCosheaf { n, stalks, cosheaf })
    }

    pub fn degree(&self) -> i32 {
        self.n
    }

    pub fn stalk(&self, s: &Simplex) -> &QStalk {
        &self.stalks[s]
    }

    pub fn cosheaf(&self) -> &CombinatorialCosheaf {
        &self.cosheaf
    }

    /// `q`: a chain of `σ▹α^*` generators to stalk vectors, summand by summand.
    pub fn project(&self, c: &Chain<Gen>) -> Chain<(Simplex, usize)> {
        let mut by_base: BTreeMap<&Simplex, Chain<Gen>> = BTreeMap::new();
        for (g, v) in c.iter() {
            by_base.entry(&g.under).or_insert_with(Chain::new).add_term(g.clone(), v.clone());
        }
        let mut out = Chain::new();
        for (s, part) in by_base {
            for (a, v) in self.stalks[s].project(&part).into_iter().enumerate() {
                out.add_term((s.clone(), a), v);
            }
        }
        out
    }

    /// Chain-level lift of a chain with `h^n` values.
    pub fn lift(&self, c: &Chain<(Simplex, usize)>) -> Chain<Gen> {
        c.map(|(s, a)| self.stalks[s].lift(*a))
    }
}
