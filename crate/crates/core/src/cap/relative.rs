use super::{cap_v1, cap_v2};
use crate::chain::Chain;
use crate::complex::{Gen, Simplex, SimplicialComplex, Subcomplex};
use crate::{Error, Result};

/// The four relative caps, for `L^vc` before `L`:
///
/// | | cochains | target |
/// |-|-|-|
/// | `One` | `C^l(X, L; h_n)` | `C_{k−l}(L^vc; R)` |
/// | `Two` | `C^l(L; h_n)` | `C_{k−l}(X, L^vc; R)` |
/// | `Three` | `C^l(X, L; R)` | `C_{k−l}(L^vc; h^n)` |
/// | `Four` | `C^l(L; R)` | `C_{k−l}(X, L^vc; h^n)` |
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelativeVariant {
    One,
    Two,
    Three,
    Four,
}

impl RelativeVariant {
    /// Cochains relative to `L` (as opposed to cochains on `L`).
    fn relative_source(self) -> bool {
        matches!(self, RelativeVariant::One | RelativeVariant::Three)
    }
}

fn check_orientation(x: &SimplicialComplex, l: &Subcomplex) -> Result<()> {
    if l.has_vc_before(x) {
        Ok(())
    } else {
        Err(Error::Orientation("the vertices of L^vc must come before those of L".into()))
    }
}

fn check_source<'a>(variant: RelativeVariant, l: &Subcomplex, mut support: impl Iterator<Item = &'a Simplex>) -> Result<()> {
    let bad = if variant.relative_source() {
        support.find(|t| l.contains(t))
    } else {
        support.find(|t| !l.contains(t))
    };
    match bad {
        Some(_) if variant.relative_source() => Err(Error::Hypothesis("cochain does not vanish on L".into())),
        Some(_) => Err(Error::Hypothesis("cochain has terms outside L".into())),
        None => Ok(()),
    }
}

/// Relative versions of [`cap_v1`]. Variant `One` asserts that the output
/// lies in `L^vc`; variant `Two` drops the terms in `L^vc`.
pub fn relative_cap_v1(
    x: &SimplicialComplex,
    l: &Subcomplex,
    variant: RelativeVariant,
    xi: &Chain<Gen>,
    phi: &Chain<Gen>,
) -> Result<Chain<Simplex>> {
    if !matches!(variant, RelativeVariant::One | RelativeVariant::Two) {
        return Err(Error::Usage("variants 3 and 4 take constant cochains".into()));
    }
    check_orientation(x, l)?;
    check_source(variant, l, phi.support().map(|g| &g.under))?;
    let vc = l.complement(x);
    let out = cap_v1(xi, phi)?;
    Ok(match variant {
        RelativeVariant::One => {
            assert!(out.support().all(|s| vc.contains(s)), "relative cap left L^vc");
            out
        }
        _ => out.filtered(|s| !vc.contains(s)),
    })
}

/// Relative versions of [`cap_v2`], with the same landing rules.
pub fn relative_cap_v2(
    x: &SimplicialComplex,
    l: &Subcomplex,
    variant: RelativeVariant,
    xi: &Chain<Gen>,
    psi: &Chain<Simplex>,
) -> Result<Chain<Gen>> {
    if !matches!(variant, RelativeVariant::Three | RelativeVariant::Four) {
        return Err(Error::Usage("variants 1 and 2 take h_n-valued cochains".into()));
    }
    check_orientation(x, l)?;
    check_source(variant, l, psi.support())?;
    let vc = l.complement(x);
    let out = cap_v2(xi, psi)?;
    Ok(match variant {
        RelativeVariant::Three => {
            assert!(out.support().all(|g| vc.contains(&g.under)), "relative cap left L^vc");
            out
        }
        _ => out.filtered(|g| !vc.contains(&g.under)),
    })
}
