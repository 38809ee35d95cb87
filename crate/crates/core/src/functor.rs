//! Simplicial maps, star-local homeomorphisms and the maps they induce on
//! chains, `h_n`-cochains and `h^n`-chains; naturality of `[X]⌢−`.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{int, ChainMap, Ring};
use crate::cap::{cap_v1, cap_v2};
use crate::chain::{build_map, Chain, Outside};
use crate::complex::{parse_map, sign, Gen, Simplex, SimplicialComplex, Subcomplex};
use crate::identities::Check;
use crate::local::{HCosheaf, HSheaf};
use crate::mv::{diagonal_class, duality_map, hypothesis_witnesses, Item};
use crate::sheaf::StalkGen;
use crate::{Error, Result};

/// A vertex map sending every simplex onto a simplex.
#[derive(Clone, Debug)]
pub struct SimplicialMap {
    source: SimplicialComplex,
    target: SimplicialComplex,
    vertex: Vec<u32>,
}

impl SimplicialMap {
    /// `pairs` are `(source label, target label)`; every source vertex must appear once.
    pub fn new(source: &SimplicialComplex, target: &SimplicialComplex, pairs: &[(String, String)]) -> Result<Self> {
        let mut vertex: Vec<Option<u32>> = vec![None; source.vertex_count()];
        for (a, b) in pairs {
            let v = source.vertex_id(a).ok_or_else(|| Error::NotInComplex(a.clone()))?;
            let w = target.vertex_id(b).ok_or_else(|| Error::NotInComplex(b.clone()))?;
            if vertex[v as usize].replace(w).is_some() {
                return Err(Error::Usage(format!("vertex `{a}` is mapped twice")));
            }
        }
        let vertex = vertex
            .iter()
            .enumerate()
            .map(|(v, w)| w.ok_or_else(|| Error::Usage(format!("vertex `{}` is not mapped", source.label(v as u32)))))
            .collect::<Result<Vec<_>>>()?;
        let f = SimplicialMap {
            source: source.clone(),
            target: target.clone(),
            vertex,
        };
        for s in source.maximal_simplices() {
            if !target.contains(&f.image(&s)) {
                return Err(Error::NotSimplicial(format!("{} ↦ {}", source.display(&s), target.display(&f.image(&s)))));
            }
        }
        Ok(f)
    }

    /// Reads `map: v -> w` lines.
    pub fn parse(source: &SimplicialComplex, target: &SimplicialComplex, text: &str) -> Result<Self> {
        Self::new(source, target, &parse_map(text)?)
    }

    pub fn identity(x: &SimplicialComplex) -> Self {
        SimplicialMap {
            source: x.clone(),
            target: x.clone(),
            vertex: (0..x.vertex_count() as u32).collect(),
        }
    }

    pub fn source(&self) -> &SimplicialComplex {
        &self.source
    }

    pub fn target(&self) -> &SimplicialComplex {
        &self.target
    }

    pub fn vertex(&self, v: u32) -> u32 {
        self.vertex[v as usize]
    }

    /// `fσ`, oriented in the target.
    pub fn image(&self, s: &Simplex) -> Simplex {
        self.target.sorted(s.vertices().iter().map(|&v| self.vertex(v)).collect())
    }

    /// `ind_f(σ)`, when `fσ` has the dimension of `σ`.
    pub fn ind(&self, s: &Simplex) -> Option<i64> {
        let images: Vec<u32> = s.vertices().iter().map(|&v| self.vertex(v)).collect();
        let distinct: BTreeSet<u32> = images.iter().copied().collect();
        (distinct.len() == images.len()).then(|| self.target.permutation_sign(&Simplex::from_ordered(images)))
    }

    /// `ind_f(σ) = 1` on every simplex that keeps its dimension.
    pub fn is_orientation_preserving(&self) -> bool {
        self.source.all_simplices().all(|s| self.ind(s).unwrap_or(1) == 1)
    }

    /// Failures of `(−1)^i ind_f(σ_⟨j⟩) = (−1)^j ind_f(σ)`, where `fσ_j` is the
    /// `i`-th vertex of `fσ`.
    pub fn face_compatibility(&self) -> Check {
        let cases: Vec<(Simplex, usize)> = self
            .source
            .all_simplices()
            .filter(|s| s.dim() > 0 && self.ind(s).is_some())
            .flat_map(|s| (0..s.len()).map(move |j| (s.clone(), j)))
            .collect();
        let fails = |(s, j): &(Simplex, usize)| {
            let image = self.image(s);
            let i = image.index_of(self.vertex(s.vertex(*j)))?;
            let lhs = sign(i) * self.ind(&s.face(*j))?;
            (lhs != sign(*j) * self.ind(s)?).then(|| format!("{} at {j}", self.source.display(s)))
        };
        Check {
            name: "orientation index on faces".into(),
            cases: cases.len(),
            failures: cases.iter().filter_map(fails).collect(),
        }
    }

    /// `σ ↦ ind_f(σ) fσ`.
    pub fn pushforward_chain(&self, c: &Chain<Simplex>) -> Result<Chain<Simplex>> {
        let mut out = Chain::new();
        for (s, v) in c.iter() {
            let e = self.ind(s).ok_or_else(|| Error::DimensionCollapse(self.source.display(s)))?;
            out.add_term(self.image(s), v * int(e));
        }
        Ok(out)
    }

    /// `f^*`, dual to [`Self::pushforward_chain`]; collapsed simplices contribute nothing.
    pub fn pullback_cochain(&self, c: &Chain<Simplex>) -> Chain<Simplex> {
        let mut out = Chain::new();
        for s in self.source.all_simplices() {
            if let Some(e) = self.ind(s) {
                let v = c.coefficient(&self.image(s));
                if !num_traits::Zero::is_zero(&v) {
                    out.add_term(s.clone(), v * int(e));
                }
            }
        }
        out
    }
}

/// `(σ, τ)` with `τ ∈ f⁻¹σ` where `f|_{st τ}` is not an isomorphism onto `st σ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarFailure {
    pub simplex: String,
    pub preimage: String,
    pub reason: String,
}

/// For every `τ` the bijection `st τ → st fτ`, stored inverted.
#[derive(Clone, Debug)]
pub struct StarLocalCertificate {
    inverse: HashMap<Simplex, HashMap<Simplex, Simplex>>,
    fibres: HashMap<Simplex, Vec<Simplex>>,
}

impl StarLocalCertificate {
    /// `(f|_{st τ})^{-1} α`.
    pub fn lift(&self, tau: &Simplex, alpha: &Simplex) -> Option<&Simplex> {
        self.inverse.get(tau)?.get(alpha)
    }

    /// `f⁻¹σ`.
    pub fn fibre(&self, s: &Simplex) -> &[Simplex] {
        self.fibres.get(s).map_or(&[], Vec::as_slice)
    }

    pub fn stars(&self) -> usize {
        self.inverse.len()
    }
}

fn star_bijection(f: &SimplicialMap, tau: &Simplex) -> std::result::Result<HashMap<Simplex, Simplex>, StarFailure> {
    let (x, y) = (&f.source, &f.target);
    let s = f.image(tau);
    let fail = |reason: String| StarFailure {
        simplex: y.display(&s),
        preimage: x.display(tau),
        reason,
    };
    if s.dim() != tau.dim() {
        return Err(fail("the simplex collapses".into()));
    }
    let star = x.star(tau).expect("source simplex");
    let vertices: BTreeSet<u32> = star.iter().flat_map(|r| r.vertices().iter().copied()).collect();
    let images: BTreeSet<u32> = vertices.iter().map(|&v| f.vertex(v)).collect();
    if images.len() != vertices.len() {
        return Err(fail("two vertices of the star have the same image".into()));
    }
    let inverse: HashMap<Simplex, Simplex> = star.iter().map(|r| (f.image(r), r.clone())).collect();
    let target = y.star(&s).expect("image simplex");
    if let Some(missing) = target.iter().find(|a| !inverse.contains_key(*a)) {
        return Err(fail(format!("{} is not hit", y.display(missing))));
    }
    if inverse.len() != target.len() {
        return Err(fail("the star maps outside the target star".into()));
    }
    Ok(inverse)
}

/// A certificate that `f` is star-local, or the first `(σ, τ)` where it is not.
pub fn check_star_local(f: &SimplicialMap) -> std::result::Result<StarLocalCertificate, StarFailure> {
    let simplices: Vec<&Simplex> = f.source.all_simplices().collect();
    let pieces: Vec<(Simplex, HashMap<Simplex, Simplex>)> = simplices
        .par_iter()
        .map(|t| star_bijection(f, t).map(|b| ((*t).clone(), b)))
        .collect::<std::result::Result<_, _>>()?;
    let mut fibres: HashMap<Simplex, Vec<Simplex>> = HashMap::new();
    for t in &simplices {
        fibres.entry(f.image(t)).or_default().push((*t).clone());
    }
    let inverse: HashMap<Simplex, HashMap<Simplex, Simplex>> = pieces.into_iter().collect();
    for (s, taus) in &fibres {
        for (i, a) in taus.iter().enumerate() {
            for b in &taus[i + 1..] {
                let sa: BTreeSet<&Simplex> = inverse[a].values().collect();
                if let Some(common) = inverse[b].values().find(|r| sa.contains(r)) {
                    return Err(StarFailure {
                        simplex: f.target.display(s),
                        preimage: f.source.display(a),
                        reason: format!("its star meets the star of {} in {}", f.source.display(b), f.source.display(common)),
                    });
                }
            }
        }
    }
    Ok(StarLocalCertificate { inverse, fibres })
}

/// A simplicial map together with its star-local certificate.
#[derive(Clone, Debug)]
pub struct StarLocalMap {
    map: SimplicialMap,
    cert: StarLocalCertificate,
}

impl StarLocalMap {
    pub fn new(map: SimplicialMap) -> Result<Self> {
        let cert = check_star_local(&map).map_err(|e| Error::NotStarLocal(format!("{} over {}: {}", e.preimage, e.simplex, e.reason)))?;
        Ok(StarLocalMap { map, cert })
    }

    pub fn map(&self) -> &SimplicialMap {
        &self.map
    }

    pub fn certificate(&self) -> &StarLocalCertificate {
        &self.cert
    }

    fn ind(&self, s: &Simplex) -> i64 {
        self.map.ind(s).expect("star-local maps keep dimensions")
    }

    /// `f_!(σ▹α) = ind_f(σ) ind_f(α) fσ▹fα`.
    pub fn shriek_down(&self, c: &Chain<Gen>) -> Chain<Gen> {
        c.map(|g| {
            let e = self.ind(&g.under) * self.ind(&g.over);
            Chain::term(
                Gen {
                    under: self.map.image(&g.under),
                    over: self.map.image(&g.over),
                },
                int(e),
            )
        })
    }

    /// `f^!(σ▹α^*) = Σ_{τ ∈ f⁻¹σ} ind_f(τ) ind_f(α̃) τ▹α̃^*` with `α̃ = (f|_{st τ})^{-1}α`.
    pub fn shriek_up(&self, c: &Chain<Gen>) -> Chain<Gen> {
        c.map(|g| {
            self.cert
                .fibre(&g.under)
                .iter()
                .filter_map(|t| {
                    let a = self.cert.lift(t, &g.over)?;
                    Some((Gen { under: t.clone(), over: a.clone() }, int(self.ind(t) * self.ind(a))))
                })
                .collect()
        })
    }
}

/// `L = f⁻¹K` as a full subcomplex of the source.
pub fn preimage(f: &SimplicialMap, k: &Subcomplex) -> Subcomplex {
    Subcomplex::spanned_by(f.source.order().into_iter().filter(|&v| k.contains_vertex(f.vertex(v))))
}

/// `f^!([Y]) = [X]` on the diagonal representatives.
pub fn fundamental_class_preserved(f: &StarLocalMap) -> bool {
    f.shriek_up(&diagonal_class(f.map.target())) == diagonal_class(f.map.source())
}

fn all_gens(x: &SimplicialComplex) -> Vec<Gen> {
    x.all_simplices()
        .flat_map(|s| x.cofaces(s).iter().map(move |a| Gen { under: s.clone(), over: a.clone() }))
        .collect()
}

/// `f_*(f^!ξ ⌢ φ) = ξ ⌢ f_!φ` and `f^!ξ ⌢ f^*ψ = f^!(ξ ⌢ ψ)` on generators.
pub fn cap_naturality_checks(f: &StarLocalMap) -> Vec<Check> {
    let (x, y) = (f.map.source(), f.map.target());
    let (gx, gy) = (all_gens(x), all_gens(y));
    let first: Vec<(Gen, Gen)> = gy
        .iter()
        .flat_map(|xi| gx.iter().filter(move |p| p.under.dim() <= xi.under.dim()).map(move |p| (xi.clone(), p.clone())))
        .collect();
    let simplices: Vec<Simplex> = y.all_simplices().cloned().collect();
    let second: Vec<(Gen, Simplex)> = gy
        .iter()
        .flat_map(|xi| simplices.iter().filter(move |t| t.dim() <= xi.under.dim()).map(move |t| (xi.clone(), t.clone())))
        .collect();
    let one = |(xi, phi): &(Gen, Gen)| -> Option<String> {
        let xi_c = Chain::unit(xi.clone());
        let lhs = cap_v1(&f.shriek_up(&xi_c), &Chain::unit(phi.clone())).and_then(|c| f.map.pushforward_chain(&c));
        let rhs = cap_v1(&xi_c, &f.shriek_down(&Chain::unit(phi.clone())));
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => None,
            _ => Some(format!("{} ⌢ {}", xi.display(y), phi.display(x))),
        }
    };
    let two = |(xi, psi): &(Gen, Simplex)| -> Option<String> {
        let xi_c = Chain::unit(xi.clone());
        let lhs = cap_v2(&f.shriek_up(&xi_c), &f.map.pullback_cochain(&Chain::unit(psi.clone())));
        let rhs = cap_v2(&xi_c, &Chain::unit(psi.clone())).map(|c| f.shriek_up(&c));
        match (lhs, rhs) {
            (Ok(a), Ok(b)) if a == b => None,
            _ => Some(format!("{} ⌢ {}", xi.display(y), y.display(psi))),
        }
    };
    vec![
        Check {
            name: "f_*(f^!ξ ⌢ φ) = ξ ⌢ f_!φ".into(),
            cases: first.len(),
            failures: first.par_iter().filter_map(one).collect(),
        },
        Check {
            name: "f^!ξ ⌢ f^*ψ = f^!(ξ ⌢ ψ)".into(),
            cases: second.len(),
            failures: second.par_iter().filter_map(two).collect(),
        },
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NaturalityReport {
    pub item: Item,
    pub ring: Ring,
    pub covariant: bool,
    pub source_order: Vec<String>,
    pub target_order: Vec<String>,
    pub source_subcomplex: Vec<String>,
    pub target_subcomplex: Vec<String>,
    pub orientation_preserving: bool,
    pub fundamental_class: bool,
    /// Empty when `f` reverses some orientation: only homology is compared then.
    pub chain_level: Vec<Check>,
    /// Per degree `l`, whether the square commutes on homology.
    pub degrees: Vec<bool>,
    pub commutes: bool,
}

fn stalk_map(
    from: (&crate::chain::Graded<StalkGen>, &crate::algebra::ChainComplex),
    to: (&crate::chain::Graded<StalkGen>, &crate::algebra::ChainComplex),
    f: impl Fn(&StalkGen) -> Chain<StalkGen>,
) -> Result<ChainMap> {
    build_map(from, to, Outside::Drop, f)
}

fn simplices(c: Chain<Simplex>) -> Chain<StalkGen> {
    c.map(|s| Chain::unit((s.clone(), 0)))
}

/// The naturality square of `item` for `f: (X, f⁻¹K) → (Y, K)`, compared on
/// homology in every degree. Both complexes need their complements first.
pub fn verify_naturality(f: &StarLocalMap, k: &Subcomplex, item: Item, ring: Ring) -> Result<NaturalityReport> {
    let (x, y) = (f.map.source(), f.map.target());
    if x.dim() != y.dim() {
        return Err(Error::Shape("source and target need the same dimension".into()));
    }
    let l = preimage(&f.map, k);
    for (z, m) in [(x, &l), (y, k)] {
        if !m.has_vc_before(z) {
            return Err(Error::Orientation("the vertices of L^vc must come before those of L".into()));
        }
        if let Some(w) = hypothesis_witnesses(z, m, item, ring)?.first() {
            return Err(Error::Hypothesis(format!("H_{} at {} is nonzero", w.degree, w.simplex.as_deref().unwrap_or("?"))));
        }
    }
    let n = x.dim() as i32;
    let (dx, dy) = (duality_map(x, &l, item, ring)?, duality_map(y, k, item, ring)?);
    let (left, right) = if item.covariant() {
        let (hx, hy) = (HSheaf::build(x, n, ring)?, HSheaf::build(y, n, ring)?);
        let down = stalk_map((&dx.source_basis, dx.source()), (&dy.source_basis, dy.source()), |(s, a)| {
            let t = f.map.image(s);
            let c = f.shriek_down(&hx.value(s, *a));
            let coords = hy.stalk(&t).coordinates(&c).expect("f_! preserves local cycles");
            coords.into_iter().enumerate().map(|(j, v)| ((t.clone(), j), v)).collect()
        })?;
        let push = stalk_map((&dx.target_basis, dx.target()), (&dy.target_basis, dy.target()), |(s, _)| {
            simplices(f.map.pushforward_chain(&Chain::unit(s.clone())).expect("star-local maps keep dimensions"))
        })?;
        (dx.map.then(&push)?, down.then(&dy.map)?)
    } else {
        let (hx, hy) = (HCosheaf::build(x, n, ring)?, HCosheaf::build(y, n, ring)?);
        let pull = stalk_map((&dy.source_basis, dy.source()), (&dx.source_basis, dx.source()), |(s, _)| {
            simplices(f.map.pullback_cochain(&Chain::unit(s.clone())))
        })?;
        let up = stalk_map((&dy.target_basis, dy.target()), (&dx.target_basis, dx.target()), |g| {
            hx.project(&f.shriek_up(&hy.lift(&Chain::unit(g.clone())))).reduced(ring)
        })?;
        (pull.then(&dx.map)?, dy.map.then(&up)?)
    };
    let degrees: Vec<bool> = (0..=n).map(|p| left.induced(n - p).matrix == right.induced(n - p).matrix).collect();
    let preserving = f.map.is_orientation_preserving();
    let chain_level = if preserving { cap_naturality_checks(f) } else { Vec::new() };
    let fundamental_class = fundamental_class_preserved(f);
    Ok(NaturalityReport {
        item,
        ring,
        covariant: item.covariant(),
        source_order: x.order_labels(),
        target_order: y.order_labels(),
        source_subcomplex: l.labels(x),
        target_subcomplex: k.labels(y),
        orientation_preserving: preserving,
        fundamental_class,
        commutes: degrees.iter().all(|d| *d) && fundamental_class && chain_level.iter().all(Check::holds),
        chain_level,
        degrees,
    })
}

#[cfg(test)]
mod tests;
