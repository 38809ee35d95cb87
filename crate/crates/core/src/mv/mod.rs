//! The Mayer–Vietoris double complex `D(L)`, its structure maps, and the
//! comparison with capping against the fundamental class.
//!
//! `D^l_k(L)` has generators `σ▹α` with `σ ∈ L_l`, `α ∈ X_k`, `σ ⊆ α`. The
//! total complex puts `D^l_k` in degree `k − l` with differential
//! `(−1)^{k−l} d + i`. Symbols outside `D(L)` count as zero throughout.

mod duality;
mod fundamental;

pub use duality::{
    duality_map, hypothesis_witnesses, orientation_independence, verify_duality, DegreeReport, DualityMap, DualityReport, Hypothesis, Item,
};
pub use fundamental::{capvsc_first, capvsc_second, diagonal_class, fundamental_class, CapComparison};

use crate::algebra::{int, ChainComplex, ChainMap, Ring};
use crate::cap::sheaf_coboundary;
use crate::chain::{build_complex, build_map, Chain, Graded, Outside};
use crate::complex::{sign, Gen, Region, Simplex, SimplicialComplex, Subcomplex};
use crate::local::local_boundary;
use crate::simplicial::{boundary, chains, Chains};
use crate::{Error, Result};

/// `(−1)^k` for a possibly negative degree.
pub(crate) fn parity(k: i32) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn levels(g: &Gen) -> (usize, usize) {
    (g.under.dim() as usize, g.over.dim() as usize)
}

fn horizontal(x: &SimplicialComplex, l: &Subcomplex, g: &Gen) -> Chain<Gen> {
    sheaf_coboundary(x, &Chain::unit(g.clone())).filtered(|h| l.contains(&h.under))
}

fn total(x: &SimplicialComplex, l: &Subcomplex, g: &Gen) -> Chain<Gen> {
    let (p, k) = levels(g);
    let mut out = local_boundary(g).scaled(&int(sign(k - p)));
    out.add_chain(&horizontal(x, l, g), &int(1));
    out
}

#[derive(Clone, Debug)]
pub struct DoubleComplex {
    x: SimplicialComplex,
    l: Subcomplex,
    vc: Subcomplex,
    ring: Ring,
    basis: Graded<Gen>,
    total: ChainComplex,
}

impl DoubleComplex {
    /// Needs `L^vc` before `L` in the orientation of `x`.
    pub fn new(x: &SimplicialComplex, l: &Subcomplex, ring: Ring) -> Result<Self> {
        if !l.has_vc_before(x) {
            return Err(Error::Orientation("the vertices of L^vc must come before those of L".into()));
        }
        let mut basis = Graded::new();
        for p in 0..=x.dim() {
            for s in l.simplices(x, p) {
                for a in x.cofaces(s) {
                    basis.insert((a.dim() - p) as i32, Gen { under: s.clone(), over: a.clone() });
                }
            }
        }
        let total = build_complex(ring, &basis, Outside::Forbid, |g| total(x, l, g))?;
        Ok(DoubleComplex {
            x: x.clone(),
            vc: l.complement(x),
            l: l.clone(),
            ring,
            basis,
            total,
        })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.x
    }

    pub fn subcomplex(&self) -> &Subcomplex {
        &self.l
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Generators by total degree `k − l`.
    pub fn basis(&self) -> &Graded<Gen> {
        &self.basis
    }

    pub fn total(&self) -> &ChainComplex {
        &self.total
    }

    /// `B = Hom(D, R)`: the transposed complex on the same symbols read as `σ▹α^*`.
    pub fn dual(&self) -> (Graded<Gen>, ChainComplex) {
        (self.basis.regraded(|k| -k), self.total.dual())
    }

    /// Generators of the cell `D^l_k`.
    pub fn cell(&self, l: usize, k: usize) -> Vec<Gen> {
        self.basis
            .at(k as i32 - l as i32)
            .iter()
            .filter(|g| levels(g) == (l, k))
            .cloned()
            .collect()
    }

    pub fn generators(&self) -> impl Iterator<Item = &Gen> {
        self.basis.iter().map(|(_, g)| g)
    }

    /// The `k`-simplices of `X` not in `L^vc`: the basis of `C_k(X, L^vc)`.
    pub fn relative_simplices(&self) -> impl Iterator<Item = &Simplex> {
        self.x.all_simplices().filter(|s| !self.vc.contains(s))
    }

    /// `i`: `(iφ)^ρ_α = Σ_j (−1)^j φ^{ρ_⟨j⟩}_α`.
    pub fn i(&self, c: &Chain<Gen>) -> Chain<Gen> {
        c.map(|g| horizontal(&self.x, &self.l, g))
    }

    /// `d`: the local boundary in every summand.
    pub fn d(&self, c: &Chain<Gen>) -> Chain<Gen> {
        c.map(local_boundary)
    }

    /// `d^D = (−1)^{k−l} d + i`.
    pub fn d_total(&self, c: &Chain<Gen>) -> Chain<Gen> {
        c.map(|g| total(&self.x, &self.l, g))
    }

    /// Last-vertex lift: `λ(σ▹α) = (−1)^l σ_{≤l−1}▹α` when `σ_l = α_k`.
    pub fn lambda(&self, c: &Chain<Gen>) -> Chain<Gen> {
        c.map(|g| {
            let (p, _) = levels(g);
            if p == 0 || g.under.last() != g.over.last() {
                return Chain::new();
            }
            Chain::term(Gen { under: g.under.front(p - 1), over: g.over.clone() }, int(sign(p)))
        })
    }

    /// `κ(α_m▹α) = δ_{m,k} α` on `D^0`; zero on higher columns.
    pub fn kappa(&self, c: &Chain<Gen>) -> Chain<Simplex> {
        c.map(|g| match levels(g) {
            (0, _) if g.under.last() == g.over.last() => Chain::unit(g.over.clone()),
            _ => Chain::new(),
        })
    }

    /// `ε(α) = Σ_j α_j▹α` over the vertices of `α` in `L`.
    pub fn epsilon(&self, c: &Chain<Simplex>) -> Chain<Gen> {
        c.map(|a| {
            a.vertices()
                .iter()
                .filter(|v| self.l.contains_vertex(**v))
                .map(|&v| (Gen { under: Simplex::from_ordered(vec![v]), over: a.clone() }, int(1)))
                .collect()
        })
    }

    /// `Λ = id − λd^D − d^Dλ`.
    pub fn big_lambda(&self, c: &Chain<Gen>) -> Chain<Gen> {
        c.clone()
            .minus(&self.lambda(&self.d_total(c)))
            .minus(&self.d_total(&self.lambda(c)))
    }

    pub fn big_lambda_power(&self, c: &Chain<Gen>, m: usize) -> Chain<Gen> {
        (0..m).fold(c.clone(), |acc, _| self.big_lambda(&acc))
    }

    /// The power `dim X + 1` at which `Λ^m` has settled onto `ker i^0`.
    pub fn stable_power(&self) -> usize {
        (self.x.dim() + 1).max(0) as usize
    }

    /// Generator formula for `Λ`.
    pub fn big_lambda_closed(&self, g: &Gen) -> Chain<Gen> {
        let (p, k) = levels(g);
        if p == 0 {
            return if g.under.last() == g.over.last() {
                self.epsilon(&Chain::unit(g.over.clone()))
            } else {
                Chain::new()
            };
        }
        let last = g.under.last();
        let c = (last == g.over.last()) as i64 - (k >= 1 && last == Some(g.over.vertex(k - 1))) as i64;
        self.symbol(g.under.front(p - 1), g.over.front(k - 1), c)
    }

    /// Generator formula for `Λ^m`: for `1 ≤ m ≤ l` it is
    /// `σ^*_{≥l−m+1}(∂α_{≥k−m}) σ_{≤l−m}▹α_{≤k−m}`, and for `m > l` it is
    /// `ε(α_{≤k−l})` when `σ = α_{≥k−l}`, else zero.
    pub fn big_lambda_power_closed(&self, g: &Gen, m: usize) -> Chain<Gen> {
        let (p, k) = levels(g);
        if m == 0 {
            return Chain::unit(g.clone());
        }
        if m <= p {
            if m > k {
                return Chain::new();
            }
            let c = boundary(&g.over.back(k - m)).coefficient(&g.under.back(p - m + 1));
            return self.symbol_scaled(g.under.front(p - m), g.over.front(k - m), c);
        }
        if g.over.back(k - p) == g.under {
            self.epsilon(&Chain::unit(g.over.front(k - p)))
        } else {
            Chain::new()
        }
    }

    fn symbol(&self, under: Simplex, over: Simplex, c: i64) -> Chain<Gen> {
        self.symbol_scaled(under, over, int(c))
    }

    fn symbol_scaled(&self, under: Simplex, over: Simplex, c: crate::algebra::Scalar) -> Chain<Gen> {
        match Gen::new(under, over) {
            Some(h) if self.l.contains(&h.under) => Chain::term(h, c),
            _ => Chain::new(),
        }
    }

    /// `𝔠(σ▹α) = α_{≤k−l}` when `σ = α_{≥k−l}`, a chain of `C_{k−l}(X, L^vc)`.
    pub fn c_map(&self, c: &Chain<Gen>) -> Chain<Simplex> {
        c.map(|g| {
            let (p, k) = levels(g);
            if g.over.back(k - p) == g.under && !self.vc.contains(&g.over.front(k - p)) {
                Chain::unit(g.over.front(k - p))
            } else {
                Chain::new()
            }
        })
    }

    /// `𝔠^∨(τ^*) = Σ α_{≥q}▹α^*` over `α ⊇ τ` with `α_{≤q} = τ` and `α_{≥q} ∈ L`.
    pub fn c_dual(&self, c: &Chain<Simplex>) -> Chain<Gen> {
        c.map(|t| {
            let q = t.dim() as usize;
            self.x
                .cofaces(t)
                .iter()
                .filter(|a| a.front(q) == *t && self.l.contains(&a.back(q)))
                .map(|a| (Gen { under: a.back(q), over: a.clone() }, int(1)))
                .collect()
        })
    }

    /// `C̄_*(X, L^vc)`: relative chains with differential `(−1)^k d`.
    pub fn target(&self) -> Result<Chains> {
        let c = chains(&self.x, &Region::Relative(self.vc.clone()), self.ring)?;
        Ok(Chains {
            complex: c.complex.with_signs(parity),
            basis: c.basis,
        })
    }

    /// `𝔠 : Tot D → C̄(X, L^vc)`; building it checks the chain-map property.
    pub fn c_chain_map(&self) -> Result<ChainMap> {
        let t = self.target()?;
        build_map((&self.basis, &self.total), (&t.basis, &t.complex), Outside::Forbid, |g| self.c_map(&Chain::unit(g.clone())))
    }

    /// `ε : C̄(X, L^vc) → Tot D`.
    pub fn epsilon_chain_map(&self) -> Result<ChainMap> {
        let t = self.target()?;
        build_map((&t.basis, &t.complex), (&self.basis, &self.total), Outside::Forbid, |a| self.epsilon(&Chain::unit(a.clone())))
    }

    /// `𝔠^∨ : Hom(C̄(X, L^vc), R) → Tot B`.
    pub fn c_dual_chain_map(&self) -> Result<ChainMap> {
        let t = self.target()?;
        let (src_basis, src) = (t.basis.regraded(|k| -k), t.complex.dual());
        let (b_basis, b) = self.dual();
        build_map((&src_basis, &src), (&b_basis, &b), Outside::Forbid, |a| self.c_dual(&Chain::unit(a.clone())))
    }

    /// The projection `D(L) → D(K)` for a full `K ⊆ L`, which is a chain map.
    pub fn restriction(&self, smaller: &DoubleComplex) -> Result<ChainMap> {
        if !smaller.l.is_subset_of(&self.l) || smaller.x != self.x {
            return Err(Error::Shape("restriction needs K ⊆ L in the same oriented complex".into()));
        }
        build_map((&self.basis, &self.total), (&smaller.basis, &smaller.total), Outside::Drop, |g| Chain::unit(g.clone()))
    }
}

/// Order `L'^vc`, then `L' − L`, then `L`: both `L` and `L'` have their
/// complements first.
pub fn nested_order(x: &SimplicialComplex, l: &Subcomplex, bigger: &Subcomplex) -> Vec<u32> {
    let order = x.order();
    let rank = |v: &u32| (bigger.contains_vertex(*v) as u8) + (l.contains_vertex(*v) as u8);
    let mut out = order;
    out.sort_by_key(rank);
    out
}
