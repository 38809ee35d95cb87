//! The fundamental class `[X] = Σ α▹α^*` and its comparison with `𝔠` and `𝔠^∨`.

use super::DoubleComplex;
use crate::cap::{relative_cap_v1, relative_cap_v2, RelativeVariant};
use crate::chain::Chain;
use crate::complex::{Gen, SimplicialComplex, Subcomplex};
use crate::local::HSheaf;
use crate::{Error, Result};

/// `Σ_{α ∈ X_n} α▹α^*` for `n = dim X`, without the purity check.
pub fn diagonal_class(x: &SimplicialComplex) -> Chain<Gen> {
    x.simplices(x.dim()).iter().map(|a| (Gen::diagonal(a.clone()), crate::algebra::int(1))).collect()
}

/// `[X]`, for pure `X`.
pub fn fundamental_class(x: &SimplicialComplex) -> Result<Chain<Gen>> {
    if !x.is_pure() {
        return Err(Error::NotPure(x.dim()));
    }
    Ok(diagonal_class(x))
}

/// Generators checked and those where the two sides disagree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CapComparison {
    pub checked: usize,
    pub mismatches: Vec<String>,
}

impl CapComparison {
    pub fn holds(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `𝔠∘ι = [X]⌢−` on every stalk generator of `C^l(L; h_n|_L)`.
pub fn capvsc_first(dc: &DoubleComplex, hs: &HSheaf) -> Result<CapComparison> {
    let (x, l) = (dc.complex(), dc.subcomplex());
    let fund = diagonal_class(x);
    let mut out = CapComparison::default();
    for p in 0..=x.dim() {
        for s in l.simplices(x, p) {
            for a in 0..hs.stalk(s).rank() {
                let phi = hs.value(s, a);
                let lhs = dc.c_map(&phi);
                let rhs = relative_cap_v1(x, l, RelativeVariant::Two, &fund, &phi)?;
                out.checked += 1;
                if lhs.reduced(dc.ring()) != rhs.reduced(dc.ring()) {
                    out.mismatches.push(format!("{}#{a}", x.display(s)));
                }
            }
        }
    }
    Ok(out)
}

/// `q∘𝔠^∨ = [X]⌢−` on every generator `τ^*` of `C^l(X, L)`. `𝔠^∨` is taken
/// for `L^vc` in the reversed orientation, where `L` comes first, and its
/// output is read back in the original orientation by vertex sets.
pub fn capvsc_second(x: &SimplicialComplex, l: &Subcomplex, ring: crate::algebra::Ring) -> Result<CapComparison> {
    let vc = l.complement(x);
    let mut order = x.order();
    order.reverse();
    let rev = x.reoriented(&order)?;
    let dc = DoubleComplex::new(&rev, &vc, ring)?;
    let fund = diagonal_class(x);
    let back = |c: Chain<Gen>| -> Chain<Gen> {
        c.map(|g| {
            Chain::unit(Gen {
                under: x.orient(&g.under),
                over: x.orient(&g.over),
            })
        })
    };
    let mut out = CapComparison::default();
    for t in x.all_simplices().filter(|t| !l.contains(t)) {
        let lhs = back(dc.c_dual(&Chain::unit(rev.orient(t))));
        let lhs = top_row(lhs, x.dim());
        let rhs = relative_cap_v2(x, l, RelativeVariant::Three, &fund, &Chain::unit(t.clone()))?;
        out.checked += 1;
        if lhs.reduced(ring) != rhs.reduced(ring) {
            out.mismatches.push(x.display(t));
        }
    }
    Ok(out)
}

/// The `B^l_n` components.
fn top_row(c: Chain<Gen>, n: isize) -> Chain<Gen> {
    c.filtered(|g| g.over.dim() == n)
}
