//! Caps with coefficients in a cosheaf `𝒢` or a sheaf `ℱ`.

use indexmap::IndexSet;

use super::{cap_v1, cap_v2, degrees};
use crate::chain::Chain;
use crate::complex::{Gen, Simplex};
use crate::sheaf::{CombinatorialCosheaf, CombinatorialSheaf, Morphism};
use crate::Result;

/// `τ▹ψ_γ ⌢_𝒢 σ▹α^* = 𝒢(α > σ_{≤k−l})ψ_α` when `α = γ` and `τ = σ_{≥k−l}`.
/// `φ` carries `(τ▹γ, i)` with `i` indexing `𝒢(γ)`; the output is a chain
/// with values in `𝒢`.
pub fn g_cap(g: &CombinatorialCosheaf, xi: &Chain<Gen>, phi: &Chain<(Gen, usize)>) -> Result<Chain<(Simplex, usize)>> {
    let Some((k, l)) = degrees(xi.support().map(|h| &h.under), phi.support().map(|(h, _)| &h.under))? else {
        return Ok(Chain::new());
    };
    let mut out = Chain::new();
    for (s, a) in xi.iter() {
        let (front, back) = (s.under.front(k - l), s.under.back(k - l));
        for ((t, i), c) in phi.iter() {
            if t.under == back && t.over == s.over {
                for (r, v) in g.map(&front, &s.over).column(*i).into_iter().enumerate() {
                    out.add_term((front.clone(), r), v * a * c);
                }
            }
        }
    }
    Ok(out.reduced(g.ring()))
}

/// `σ▹α^* ⌢ τ▹φ^τ = σ_{≤k−l}▹ℱ(σ_{≥k−l} < α)φ` when `σ_{≥k−l} = τ`.
pub fn f_cap(f: &CombinatorialSheaf, xi: &Chain<Gen>, phi: &Chain<(Simplex, usize)>) -> Result<Chain<(Gen, usize)>> {
    let Some((k, l)) = degrees(xi.support().map(|h| &h.under), phi.support().map(|(t, _)| t))? else {
        return Ok(Chain::new());
    };
    let mut out = Chain::new();
    for (s, a) in xi.iter() {
        let back = s.under.back(k - l);
        let target = Gen {
            under: s.under.front(k - l),
            over: s.over.clone(),
        };
        for ((t, i), c) in phi.iter() {
            if *t == back {
                for (r, v) in f.map(t, &s.over).column(*i).into_iter().enumerate() {
                    out.add_term((target.clone(), r), v * a * c);
                }
            }
        }
    }
    Ok(out.reduced(f.ring()))
}

/// `− ⌢ ξ` with constant coefficients as a morphism of `𝒞(X)`, from the
/// `τ▹γ` in `source` to the plain symbols `∅▹ρ` it reaches.
pub fn g_cap_morphism(xi: &Chain<Gen>, source: IndexSet<Gen>) -> Result<Morphism> {
    let mut target = IndexSet::new();
    for t in &source {
        for s in cap_v1(xi, &Chain::unit(t.clone()))?.support() {
            target.insert(Gen::plain(s.clone()));
        }
    }
    Morphism::from_fn(source, target, false, |t| {
        cap_v1(xi, &Chain::unit(t.clone())).expect("degrees checked").map(|s| Chain::unit(Gen::plain(s.clone())))
    })
}

/// `ξ ⌢ −` with constant coefficients as a morphism of `𝒞*(X)`, from plain
/// symbols `∅▹τ` to the `σ▹α^*` they reach.
pub fn f_cap_morphism(xi: &Chain<Gen>, source: IndexSet<Gen>) -> Result<Morphism> {
    let mut target = IndexSet::new();
    for t in &source {
        for g in cap_v2(xi, &Chain::unit(t.over.clone()))?.support() {
            target.insert(g.clone());
        }
    }
    Morphism::from_fn(source, target, true, |t| cap_v2(xi, &Chain::unit(t.over.clone())).expect("degrees checked"))
}
