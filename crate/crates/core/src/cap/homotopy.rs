//! Chain homotopies between the caps of two orientations that differ by
//! swapping adjacent vertices `u < w`.

use super::{cap_plain, cap_v1, cap_v2, cosheaf_boundary, sheaf_coboundary, simplicial_boundary, simplicial_coboundary};
use crate::algebra::int;
use crate::chain::Chain;
use crate::complex::{sign, Gen, Simplex, SimplicialComplex};
use crate::{Error, Result};

/// Both sides of `sg(σ_{≤k−l})·(σ⌢φ) − sg(σ)sg(φ)·(σ ⌢̃ φ) = d̃B + Bd`,
/// written in the swapped orientation.
#[derive(Clone, Debug, PartialEq)]
pub struct HomotopyDefect<T: Ord + Clone> {
    pub lhs: Chain<T>,
    pub rhs: Chain<T>,
}

impl<T: Ord + Clone> HomotopyDefect<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

struct Swap {
    tilde: SimplicialComplex,
    u: u32,
    w: u32,
}

impl Swap {
    fn new(x: &SimplicialComplex, u: u32, w: u32) -> Result<Self> {
        if u as usize >= x.vertex_count() || w as usize >= x.vertex_count() || x.position(w) != x.position(u) + 1 {
            return Err(Error::Orientation(format!("vertices {u} and {w} are not adjacent in the order")));
        }
        Ok(Swap {
            tilde: x.with_swapped(u, w),
            u,
            w,
        })
    }

    fn sg(&self, s: &Simplex) -> i64 {
        self.tilde.permutation_sign(s)
    }

    fn simplices(&self, c: &Chain<Simplex>) -> Chain<Simplex> {
        c.map(|s| Chain::term(self.tilde.orient(s), int(self.sg(s))))
    }

    fn gens(&self, c: &Chain<Gen>) -> Chain<Gen> {
        c.map(|g| {
            let h = Gen {
                under: self.tilde.orient(&g.under),
                over: self.tilde.orient(&g.over),
            };
            Chain::term(h, int(self.sg(&g.under) * self.sg(&g.over)))
        })
    }

    /// `j = k − l` when `σ_j = u` and `σ_{j+1} = w`.
    fn split(&self, s: &Simplex, l: isize) -> Option<usize> {
        let j = s.dim() - l;
        (j >= 0 && (j as usize) + 1 < s.len() && s.vertex(j as usize) == self.u && s.vertex(j as usize + 1) == self.w)
            .then_some(j as usize)
    }

    /// `σ_{≤j+1}` in the swapped orientation.
    fn lifted(&self, s: &Simplex, j: usize) -> Simplex {
        self.tilde.orient(&s.front(j + 1))
    }

    fn b_plain(&self, sigma: &Chain<Simplex>, psi: &Chain<Simplex>) -> Chain<Simplex> {
        let mut out = Chain::new();
        for (s, a) in sigma.iter() {
            for (t, b) in psi.iter() {
                if let Some(j) = self.split(s, t.dim()) {
                    if s.back(j) == *t {
                        out.add_term(self.lifted(s, j), a * b * int(sign(j)));
                    }
                }
            }
        }
        out
    }

    fn b_v1(&self, xi: &Chain<Gen>, phi: &Chain<Gen>) -> Chain<Simplex> {
        let mut out = Chain::new();
        for (s, a) in xi.iter() {
            for (t, b) in phi.iter() {
                if let Some(j) = self.split(&s.under, t.under.dim()) {
                    if s.under.back(j) == t.under && s.over == t.over {
                        out.add_term(self.lifted(&s.under, j), a * b * int(sign(j)));
                    }
                }
            }
        }
        out
    }

    fn b_v2(&self, xi: &Chain<Gen>, psi: &Chain<Simplex>) -> Chain<Gen> {
        let mut out = Chain::new();
        for (s, a) in xi.iter() {
            for (t, b) in psi.iter() {
                if let Some(j) = self.split(&s.under, t.dim()) {
                    if s.under.back(j) == *t {
                        let h = Gen {
                            under: self.lifted(&s.under, j),
                            over: self.tilde.orient(&s.over),
                        };
                        out.add_term(h, a * b * int(sign(j) * self.sg(&s.over)));
                    }
                }
            }
        }
        out
    }
}

fn dims(k: isize, l: isize) -> Result<i64> {
    if l > k {
        return Err(Error::DegreeMismatch {
            k: k.max(0) as usize,
            l: l.max(0) as usize,
        });
    }
    Ok(sign((k - l) as usize))
}

/// The identity for constant coefficients on one generator pair `σ ⊗ τ^*`.
pub fn homotopy_defect(x: &SimplicialComplex, u: u32, w: u32, sigma: &Simplex, tau: &Simplex) -> Result<HomotopyDefect<Simplex>> {
    let sw = Swap::new(x, u, w)?;
    let e = int(dims(sigma.dim(), tau.dim())?);
    let (s, t) = (Chain::unit(sigma.clone()), Chain::unit(tau.clone()));
    let lhs = sw.simplices(&cap_plain(&s, &t)?).minus(&cap_plain(&sw.simplices(&s), &sw.simplices(&t))?);
    let mut rhs = simplicial_boundary(&sw.b_plain(&s, &t));
    rhs.add_chain(&sw.b_plain(&simplicial_boundary(&s), &t), &int(1));
    rhs.add_chain(&sw.b_plain(&s, &simplicial_coboundary(x, &t)), &e);
    Ok(HomotopyDefect { lhs, rhs })
}

/// The identity for `C_k(X; h^n) ⊗ C^l(X; h_n) → C_{k−l}(X)` on `σ▹β^* ⊗ τ▹γ`.
pub fn homotopy_defect_v1(x: &SimplicialComplex, u: u32, w: u32, xi: &Gen, phi: &Gen) -> Result<HomotopyDefect<Simplex>> {
    let sw = Swap::new(x, u, w)?;
    let e = int(dims(xi.under.dim(), phi.under.dim())?);
    let (s, t) = (Chain::unit(xi.clone()), Chain::unit(phi.clone()));
    let lhs = sw.simplices(&cap_v1(&s, &t)?).minus(&cap_v1(&sw.gens(&s), &sw.gens(&t))?);
    let mut rhs = simplicial_boundary(&sw.b_v1(&s, &t));
    rhs.add_chain(&sw.b_v1(&cosheaf_boundary(&s), &t), &int(1));
    rhs.add_chain(&sw.b_v1(&s, &sheaf_coboundary(x, &t)), &e);
    Ok(HomotopyDefect { lhs, rhs })
}

/// The identity for `C_k(X; h^n) ⊗ C^l(X) → C_{k−l}(X; h^n)` on `σ▹β^* ⊗ τ^*`.
pub fn homotopy_defect_v2(x: &SimplicialComplex, u: u32, w: u32, xi: &Gen, psi: &Simplex) -> Result<HomotopyDefect<Gen>> {
    let sw = Swap::new(x, u, w)?;
    let e = int(dims(xi.under.dim(), psi.dim())?);
    let (s, t) = (Chain::unit(xi.clone()), Chain::unit(psi.clone()));
    let lhs = sw.gens(&cap_v2(&s, &t)?).minus(&cap_v2(&sw.gens(&s), &sw.simplices(&t))?);
    let mut rhs = cosheaf_boundary(&sw.b_v2(&s, &t));
    rhs.add_chain(&sw.b_v2(&cosheaf_boundary(&s), &t), &int(1));
    rhs.add_chain(&sw.b_v2(&s, &simplicial_coboundary(x, &t)), &e);
    Ok(HomotopyDefect { lhs, rhs })
}
