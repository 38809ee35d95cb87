//! Back-face cap products on `σ▹α` generators, extended bilinearly.
//!
//! Chains with `h^n` values are written as chains of `σ▹β^*` symbols (a
//! `Gen` whose `under` is the chain simplex), cochains with `h_n` values as
//! chains of `τ▹γ` symbols. Both are chain-level representatives.

mod coefficients;
mod homotopy;
mod relative;

use std::collections::BTreeMap;

pub use coefficients::{f_cap, f_cap_morphism, g_cap, g_cap_morphism};
pub use homotopy::{homotopy_defect, homotopy_defect_v1, homotopy_defect_v2, HomotopyDefect};
pub use relative::{relative_cap_v1, relative_cap_v2, RelativeVariant};

use num_traits::Zero;

use crate::algebra::{int, Scalar};
use crate::chain::Chain;
use crate::complex::{sign, Gen, Simplex, SimplicialComplex};
use crate::local::{HCosheaf, HSheaf};
use crate::simplicial::{boundary, coboundary};
use crate::{Error, Result};

/// The common dimension of a family of simplices, `None` if empty.
fn degree<'a>(dims: impl Iterator<Item = &'a Simplex>, what: &str) -> Result<Option<usize>> {
    let mut out = None;
    for s in dims {
        let d = s.dim();
        if d < 0 {
            return Err(Error::Shape(format!("{what} has a term on the empty simplex")));
        }
        match out {
            None => out = Some(d as usize),
            Some(e) if e != d as usize => return Err(Error::Shape(format!("{what} is not homogeneous"))),
            _ => {}
        }
    }
    Ok(out)
}

/// `(k, l)` of a cap, or `None` when either side is zero.
fn degrees<'a>(
    chain: impl Iterator<Item = &'a Simplex>,
    cochain: impl Iterator<Item = &'a Simplex>,
) -> Result<Option<(usize, usize)>> {
    match (degree(chain, "chain")?, degree(cochain, "cochain")?) {
        (Some(k), Some(l)) if l > k => Err(Error::DegreeMismatch { k, l }),
        (Some(k), Some(l)) => Ok(Some((k, l))),
        _ => Ok(None),
    }
}

fn by_base(phi: &Chain<Gen>) -> BTreeMap<&Simplex, Vec<(&Simplex, &Scalar)>> {
    let mut out: BTreeMap<&Simplex, Vec<(&Simplex, &Scalar)>> = BTreeMap::new();
    for (g, c) in phi.iter() {
        out.entry(&g.under).or_default().push((&g.over, c));
    }
    out
}

/// `σ ⌢ τ^* = τ^*(σ_{≥k−l}) σ_{≤k−l}` with constant coefficients.
pub fn cap_plain(sigma: &Chain<Simplex>, psi: &Chain<Simplex>) -> Result<Chain<Simplex>> {
    let Some((k, l)) = degrees(sigma.support(), psi.support())? else {
        return Ok(Chain::new());
    };
    let mut out = Chain::new();
    for (s, a) in sigma.iter() {
        let b = psi.coefficient(&s.back(k - l));
        if !b.is_zero() {
            out.add_term(s.front(k - l), a * b);
        }
    }
    Ok(out)
}

/// `σ▹β^* ⌢ τ▹γ = ⟨β^*, γ⟩ σ_{≤k−l}` when `σ_{≥k−l} = τ`.
pub fn cap_v1(xi: &Chain<Gen>, phi: &Chain<Gen>) -> Result<Chain<Simplex>> {
    let Some((k, l)) = degrees(xi.support().map(|g| &g.under), phi.support().map(|g| &g.under))? else {
        return Ok(Chain::new());
    };
    let values = by_base(phi);
    let mut out = Chain::new();
    for (g, a) in xi.iter() {
        let Some(terms) = values.get(&g.under.back(k - l)) else { continue };
        for (gamma, b) in terms {
            if **gamma == g.over {
                out.add_term(g.under.front(k - l), a * *b);
            }
        }
    }
    Ok(out)
}

/// `σ▹β^* ⌢ τ^* = σ_{≤k−l}▹β^*` when `σ_{≥k−l} = τ`.
pub fn cap_v2(xi: &Chain<Gen>, psi: &Chain<Simplex>) -> Result<Chain<Gen>> {
    let Some((k, l)) = degrees(xi.support().map(|g| &g.under), psi.support())? else {
        return Ok(Chain::new());
    };
    let mut out = Chain::new();
    for (g, a) in xi.iter() {
        let b = psi.coefficient(&g.under.back(k - l));
        if !b.is_zero() {
            out.add_term(
                Gen {
                    under: g.under.front(k - l),
                    over: g.over.clone(),
                },
                a * b,
            );
        }
    }
    Ok(out)
}

/// `cap_v1` on stalk coordinates: lifts `ξ`, expands `φ`.
pub fn cap_v1_stalks(
    hc: &HCosheaf,
    hs: &HSheaf,
    xi: &Chain<(Simplex, usize)>,
    phi: &Chain<(Simplex, usize)>,
) -> Result<Chain<Simplex>> {
    cap_v1(&hc.lift(xi), &hs.expand(phi))
}

/// `cap_v2` on stalk coordinates, projected back to `h^n` classes.
pub fn cap_v2_stalks(hc: &HCosheaf, xi: &Chain<(Simplex, usize)>, psi: &Chain<Simplex>) -> Result<Chain<(Simplex, usize)>> {
    Ok(hc.project(&cap_v2(&hc.lift(xi), psi)?))
}

/// Boundary of `C_*(X; h^n)` on representatives: `Σ (−1)^j σ_⟨j⟩▹β^*`.
pub fn cosheaf_boundary(xi: &Chain<Gen>) -> Chain<Gen> {
    xi.map(|g| {
        let mut out = Chain::new();
        if g.under.len() > 1 {
            for (j, f) in g.under.boundary_faces() {
                out.add_signed(
                    Gen {
                        under: f,
                        over: g.over.clone(),
                    },
                    sign(j),
                );
            }
        }
        out
    })
}

/// Coboundary of `C^*(X; h_n)` on representatives: `Σ (−1)^i ρ▹γ` over
/// cofacets `ρ` of `τ` with `ρ_⟨i⟩ = τ`, dropping `ρ ⊄ γ`.
pub fn sheaf_coboundary(x: &SimplicialComplex, phi: &Chain<Gen>) -> Chain<Gen> {
    phi.map(|g| {
        let mut out = Chain::new();
        for (rho, c) in coboundary(x, &g.under).iter() {
            if let Some(h) = Gen::new(rho.clone(), g.over.clone()) {
                out.add_term(h, c.clone());
            }
        }
        out
    })
}

pub fn simplicial_boundary(c: &Chain<Simplex>) -> Chain<Simplex> {
    c.map(boundary)
}

pub fn simplicial_coboundary(x: &SimplicialComplex, c: &Chain<Simplex>) -> Chain<Simplex> {
    c.map(|s| coboundary(x, s))
}

fn sign_of(k: usize, l: usize) -> Scalar {
    int(sign(k - l))
}

/// `d(ξ⌢φ) − dξ⌢φ − (−1)^{k−l} ξ⌢∂φ` for the first cap; zero on a chain map.
pub fn leibniz_defect_v1(x: &SimplicialComplex, xi: &Chain<Gen>, phi: &Chain<Gen>) -> Result<Chain<Simplex>> {
    let Some((k, l)) = degrees(xi.support().map(|g| &g.under), phi.support().map(|g| &g.under))? else {
        return Ok(Chain::new());
    };
    let lhs = simplicial_boundary(&cap_v1(xi, phi)?);
    let mut rhs = Chain::new();
    if l < k {
        rhs = cap_v1(&cosheaf_boundary(xi), phi)?;
        rhs.add_chain(&cap_v1(xi, &sheaf_coboundary(x, phi))?, &sign_of(k, l));
    }
    Ok(lhs.minus(&rhs))
}

/// The same defect for the second cap, with the cosheaf boundary on the output.
pub fn leibniz_defect_v2(x: &SimplicialComplex, xi: &Chain<Gen>, psi: &Chain<Simplex>) -> Result<Chain<Gen>> {
    let Some((k, l)) = degrees(xi.support().map(|g| &g.under), psi.support())? else {
        return Ok(Chain::new());
    };
    let lhs = cosheaf_boundary(&cap_v2(xi, psi)?);
    let mut rhs = Chain::new();
    if l < k {
        rhs = cap_v2(&cosheaf_boundary(xi), psi)?;
        rhs.add_chain(&cap_v2(xi, &simplicial_coboundary(x, psi))?, &sign_of(k, l));
    }
    Ok(lhs.minus(&rhs))
}

/// The same defect with constant coefficients.
pub fn leibniz_defect_plain(x: &SimplicialComplex, sigma: &Chain<Simplex>, psi: &Chain<Simplex>) -> Result<Chain<Simplex>> {
    let Some((k, l)) = degrees(sigma.support(), psi.support())? else {
        return Ok(Chain::new());
    };
    let lhs = simplicial_boundary(&cap_plain(sigma, psi)?);
    let mut rhs = Chain::new();
    if l < k {
        rhs = cap_plain(&simplicial_boundary(sigma), psi)?;
        rhs.add_chain(&cap_plain(sigma, &simplicial_coboundary(x, psi))?, &sign_of(k, l));
    }
    Ok(lhs.minus(&rhs))
}

#[cfg(test)]
mod tests;
