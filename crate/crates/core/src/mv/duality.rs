//! The eight maps `[X]⌢−` and their verdicts on homology.
//!
//! Every (co)chain complex here is indexed by stalk symbols `(σ, a)`;
//! constant coefficients use `a = 0`. A cochain complex `C^l` sits in degree
//! `n − l` so that the cap is degree preserving, and targets carry the
//! differential `(−1)^j d`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::{diagonal_class, parity};
use crate::algebra::{int, ChainComplex, ChainMap, Ring};
use crate::cap::{relative_cap_v1, relative_cap_v2, RelativeVariant};
use crate::chain::{build_map, Chain, Graded, Outside};
use crate::complex::{Gen, Region, Simplex, SimplicialComplex, Subcomplex};
use crate::local::{cm_check, HCosheaf, HSheaf, Witness};
use crate::report::{matrix_rows, stalk_labels, Group};
use crate::sheaf::{cosheaf_chain_complex, sheaf_cochain_complex, StalkGen, Support, Variant};
use crate::simplicial::{chains, cochains};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(into = "String")]
pub enum Item {
    I1ai,
    I1aii,
    I2ai,
    I2aii,
    I2bi,
    I2bii,
    I1bi,
    I1bii,
}

/// Where local Cohen–Macaulayness is required.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Hypothesis {
    AtL,
    Everywhere,
    AtComplement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    /// `C^l(L; h_n) → C_{n−l}(X, L^vc)`
    OneA,
    /// `C^l(X, L; h_n) → C_{n−l}(L^vc)`
    TwoA,
    /// `C^l(X, L) → C_{n−l}(L^vc; h^n)`
    TwoB,
    /// `C^l(L) → C_{n−l}(X, L^vc; h^n)`
    OneB,
}

impl Item {
    pub const ALL: [Item; 8] = [
        Item::I1ai,
        Item::I1aii,
        Item::I2ai,
        Item::I2aii,
        Item::I2bi,
        Item::I2bii,
        Item::I1bi,
        Item::I1bii,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Item::I1ai => "1ai",
            Item::I1aii => "1aii",
            Item::I2ai => "2ai",
            Item::I2aii => "2aii",
            Item::I2bi => "2bi",
            Item::I2bii => "2bii",
            Item::I1bi => "1bi",
            Item::I1bii => "1bii",
        }
    }

    fn family(self) -> Family {
        match self {
            Item::I1ai | Item::I1aii => Family::OneA,
            Item::I2ai | Item::I2aii => Family::TwoA,
            Item::I2bi | Item::I2bii => Family::TwoB,
            Item::I1bi | Item::I1bii => Family::OneB,
        }
    }

    /// The `i` variants: compact supports and finite chains.
    pub fn compact(self) -> bool {
        matches!(self, Item::I1ai | Item::I2ai | Item::I2bi | Item::I1bi)
    }

    /// Items natural along `f_!` and `f_*`; the others go along `f^*` and `f^!`.
    pub fn covariant(self) -> bool {
        matches!(self.family(), Family::OneA | Family::TwoA)
    }

    pub fn hypothesis(self) -> Hypothesis {
        match self.family() {
            Family::OneA => Hypothesis::AtL,
            Family::TwoB => Hypothesis::AtComplement,
            Family::TwoA | Family::OneB => Hypothesis::Everywhere,
        }
    }

    /// Names of the source and target groups.
    pub fn groups(self) -> (&'static str, &'static str) {
        match (self.family(), self.compact()) {
            (Family::OneA, true) => ("H^l_c(L; h_n|_L)", "H_{n-l}(X, L^vc)"),
            (Family::OneA, false) => ("H^l(L; h_n|_L)", "H^lf_{n-l}(X, L^vc)"),
            (Family::TwoA, true) => ("H^l_c(X, L; h_n)", "H_{n-l}(L^vc)"),
            (Family::TwoA, false) => ("H^l(X, L; h_n)", "H^lf_{n-l}(L^vc)"),
            (Family::TwoB, true) => ("H^l_c(X, L)", "H_{n-l}(L^vc; h^n|_{L^vc})"),
            (Family::TwoB, false) => ("H^l(X, L)", "H^lf_{n-l}(L^vc; h^n|_{L^vc})"),
            (Family::OneB, true) => ("H^l_c(L)", "H_{n-l}(X, L^vc; h^n)"),
            (Family::OneB, false) => ("H^l(L)", "H^lf_{n-l}(X, L^vc; h^n)"),
        }
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl From<Item> for String {
    fn from(i: Item) -> String {
        i.label().to_string()
    }
}

impl FromStr for Item {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase().replace('.', "");
        Item::ALL
            .into_iter()
            .find(|i| i.label() == t)
            .ok_or_else(|| Error::Usage(format!("unknown item `{s}`; expected one of 1ai 1aii 2ai 2aii 2bi 2bii 1bi 1bii")))
    }
}

/// Witnesses against the hypothesis of `item`; empty when it holds.
pub fn hypothesis_witnesses(x: &SimplicialComplex, l: &Subcomplex, item: Item, ring: Ring) -> Result<Vec<Witness>> {
    let n = x.dim() as i32;
    let (region, flagged_only) = match item.hypothesis() {
        Hypothesis::AtL => (l.clone(), true),
        Hypothesis::AtComplement => (l.complement(x), true),
        Hypothesis::Everywhere => (l.clone(), false),
    };
    Ok(cm_check(x, &region, n, ring)?
        .witnesses
        .into_iter()
        .filter(|w| w.simplex.is_some() && (w.in_subcomplex || !flagged_only))
        .collect())
}

/// The chain map `[X]⌢−` of one item, on stalk-indexed bases.
#[derive(Clone, Debug)]
pub struct DualityMap {
    pub item: Item,
    pub n: i32,
    pub source_basis: Graded<StalkGen>,
    pub target_basis: Graded<StalkGen>,
    pub map: ChainMap,
    plain_source: bool,
    plain_target: bool,
}

impl DualityMap {
    pub fn source(&self) -> &ChainComplex {
        self.map.source()
    }

    pub fn target(&self) -> &ChainComplex {
        self.map.target()
    }
}

fn as_stalks(g: &Graded<Simplex>) -> Graded<StalkGen> {
    let mut out = Graded::new();
    for (k, s) in g.iter() {
        out.insert(k, (s.clone(), 0));
    }
    out
}

fn plain(c: Chain<Simplex>) -> Chain<StalkGen> {
    c.map(|s| Chain::unit((s.clone(), 0)))
}

struct Side {
    basis: Graded<StalkGen>,
    complex: ChainComplex,
}

fn assemble(
    item: Item,
    n: i32,
    src: Side,
    tgt: Side,
    plain_source: bool,
    plain_target: bool,
    f: impl Fn(&StalkGen) -> Result<Chain<StalkGen>>,
) -> Result<DualityMap> {
    let source_basis = src.basis.regraded(|k| k + n);
    let source = src.complex.shifted(n);
    let target = tgt.complex.with_signs(parity);
    let images: HashMap<StalkGen, Chain<StalkGen>> =
        source_basis.iter().map(|(_, t)| Ok((t.clone(), f(t)?))).collect::<Result<_>>()?;
    let map = build_map((&source_basis, &source), (&tgt.basis, &target), Outside::Forbid, |t| images[t].clone())?;
    Ok(DualityMap {
        item,
        n,
        source_basis,
        target_basis: tgt.basis,
        map,
        plain_source,
        plain_target,
    })
}

/// Builds the chain map of `item` without checking its hypothesis. Building
/// it verifies that it commutes with the differentials.
pub fn duality_map(x: &SimplicialComplex, l: &Subcomplex, item: Item, ring: Ring) -> Result<DualityMap> {
    if !l.has_vc_before(x) {
        return Err(Error::Orientation("the vertices of L^vc must come before those of L".into()));
    }
    if x.dim() < 0 {
        return Err(Error::Hypothesis("the complex is empty".into()));
    }
    let n = x.dim() as i32;
    let vc = l.complement(x);
    let fund = diagonal_class(x);
    let support = if item.compact() { Support::Compact } else { Support::Plain };
    let variant = if item.compact() { Variant::Finite } else { Variant::LocallyFinite };
    match item.family() {
        Family::OneA | Family::TwoA => {
            let hs = HSheaf::build(x, n, ring)?;
            let (region, target, which) = if item.family() == Family::OneA {
                (Region::Sub(l.clone()), Region::Relative(vc), RelativeVariant::Two)
            } else {
                (Region::Relative(l.clone()), Region::Sub(vc), RelativeVariant::One)
            };
            let s = sheaf_cochain_complex(x, hs.sheaf(), &region, support)?;
            let t = chains(x, &target, ring)?;
            assemble(
                item,
                n,
                Side { basis: s.basis, complex: s.complex },
                Side { basis: as_stalks(&t.basis), complex: t.complex },
                false,
                true,
                |(s, a)| Ok(plain(relative_cap_v1(x, l, which, &fund, &hs.value(s, *a))?.reduced(ring))),
            )
        }
        Family::TwoB | Family::OneB => {
            let hc = HCosheaf::build(x, n, ring)?;
            let (region, target, which) = if item.family() == Family::TwoB {
                (Region::Relative(l.clone()), Region::Sub(vc), RelativeVariant::Three)
            } else {
                (Region::Sub(l.clone()), Region::Relative(vc), RelativeVariant::Four)
            };
            let s = cochains(x, &region, ring)?;
            let t = cosheaf_chain_complex(x, hc.cosheaf(), &target, variant)?;
            assemble(
                item,
                n,
                Side { basis: as_stalks(&s.basis), complex: s.complex },
                Side { basis: t.basis, complex: t.complex },
                true,
                false,
                |(s, _)| Ok(hc.project(&relative_cap_v2(x, l, which, &fund, &Chain::unit(s.clone()))?).reduced(ring)),
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    /// Cohomological degree of the source.
    pub l: i32,
    pub source: Group,
    pub target: Group,
    pub matrix: Vec<Vec<String>>,
    pub iso: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityReport {
    pub item: Item,
    pub ring: Ring,
    pub n: i32,
    pub order: Vec<String>,
    pub subcomplex: Vec<String>,
    pub source: String,
    pub target: String,
    pub degrees: Vec<DegreeReport>,
    pub iso: bool,
}

impl DualityReport {
    /// Free ranks of the source in degrees `l = 0..=n` (dimensions over a field).
    pub fn ranks(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.source.rank).collect()
    }
}

/// Checks the orientation and the hypothesis of `item`, then computes the
/// map induced by `[X]⌢−` in every degree.
pub fn verify_duality(x: &SimplicialComplex, l: &Subcomplex, item: Item, ring: Ring) -> Result<DualityReport> {
    if !l.has_vc_before(x) {
        return Err(Error::Orientation("the vertices of L^vc must come before those of L".into()));
    }
    let witnesses = hypothesis_witnesses(x, l, item, ring)?;
    if let Some(w) = witnesses.first() {
        let place = match item.hypothesis() {
            Hypothesis::AtL => "at L",
            Hypothesis::AtComplement => "at L^vc",
            Hypothesis::Everywhere => "",
        };
        return Err(Error::Hypothesis(format!(
            "X is not locally CM {place}: H_{} at {} is nonzero",
            w.degree,
            w.simplex.as_deref().unwrap_or("?")
        )));
    }
    let f = duality_map(x, l, item, ring)?;
    let (source, target) = item.groups();
    let degrees: Vec<DegreeReport> = (0..=f.n)
        .map(|p| {
            let k = f.n - p;
            let h = f.map.induced(k);
            DegreeReport {
                l: p,
                source: Group::new(&h.source, &stalk_labels(x, &f.source_basis, k, f.plain_source)),
                target: Group::new(&h.target, &stalk_labels(x, &f.target_basis, k, f.plain_target)),
                matrix: matrix_rows(&h.matrix),
                iso: h.is_isomorphism,
            }
        })
        .collect();
    Ok(DualityReport {
        item,
        ring,
        n: f.n,
        order: x.order_labels(),
        subcomplex: l.labels(x),
        source: source.into(),
        target: target.into(),
        iso: degrees.iter().all(|d| d.iso),
        degrees,
    })
}

/// `σ▹α^*`-style symbols moved to orientation `y` with sign `sg(σ)sg(α)`.
fn gens_to(y: &SimplicialComplex, c: &Chain<Gen>) -> Chain<Gen> {
    c.map(|g| {
        Chain::term(
            Gen {
                under: y.orient(&g.under),
                over: y.orient(&g.over),
            },
            int(y.permutation_sign(&g.under) * y.permutation_sign(&g.over)),
        )
    })
}

/// Compares `[X]⌢−` in two orientations `x` and `y` (both with `L^vc`
/// before `L`) through the reorientation isomorphisms `ρ ↦ sg(ρ)ρ̃`. Returns
/// per degree `l` whether the two induced maps agree.
pub fn orientation_independence(x: &SimplicialComplex, y: &SimplicialComplex, l: &Subcomplex, item: Item, ring: Ring) -> Result<Vec<bool>> {
    let fx = duality_map(x, l, item, ring)?;
    let fy = duality_map(y, l, item, ring)?;
    let n = fx.n;
    let simplex = |(s, a): &StalkGen| Chain::term((y.orient(s), *a), int(y.permutation_sign(s)));
    let (a, b) = match item.family() {
        Family::OneA | Family::TwoA => {
            let (hx, hy) = (HSheaf::build(x, n, ring)?, HSheaf::build(y, n, ring)?);
            let a = build_map((&fx.source_basis, fx.source()), (&fy.source_basis, fy.source()), Outside::Forbid, |(s, i)| {
                let t = y.orient(s);
                let c = gens_to(y, &hx.value(s, *i));
                let coords = hy.stalk(&t).coordinates(&c).expect("reorientation keeps local cycles");
                coords.into_iter().enumerate().map(|(j, v)| ((t.clone(), j), v)).collect()
            })?;
            let b = build_map((&fx.target_basis, fx.target()), (&fy.target_basis, fy.target()), Outside::Forbid, simplex)?;
            (a, b)
        }
        Family::TwoB | Family::OneB => {
            let (hx, hy) = (HCosheaf::build(x, n, ring)?, HCosheaf::build(y, n, ring)?);
            let a = build_map((&fx.source_basis, fx.source()), (&fy.source_basis, fy.source()), Outside::Forbid, simplex)?;
            let b = build_map((&fx.target_basis, fx.target()), (&fy.target_basis, fy.target()), Outside::Forbid, |g| {
                hy.project(&gens_to(y, &hx.lift(&Chain::unit(g.clone())))).reduced(ring)
            })?;
            (a, b)
        }
    };
    let left = a.then(&fy.map)?;
    let right = fx.map.then(&b)?;
    Ok((0..=n).map(|p| left.induced(n - p).matrix == right.induced(n - p).matrix).collect())
}
