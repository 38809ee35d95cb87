//! Generator-exhaustive sweeps over the chain-level identities: the double
//! complex axioms, the last-vertex lift and diagonal shift, `𝔠` and `𝔠^∨`,
//! Leibniz rules and the reordering homotopies.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Ring;
use crate::cap::{
    homotopy_defect, homotopy_defect_v1, homotopy_defect_v2, leibniz_defect_plain, leibniz_defect_v1, leibniz_defect_v2,
};
use crate::chain::Chain;
use crate::complex::{Gen, Simplex, SimplicialComplex, Subcomplex};
use crate::local::HSheaf;
use crate::mv::{capvsc_first, capvsc_second, DoubleComplex};
use crate::simplicial::boundary;
use crate::Result;

/// One identity: how many cases were tried and which failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl Check {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub ring: Ring,
    pub order: Vec<String>,
    pub subcomplex: Vec<String>,
    pub checks: Vec<Check>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.checks.iter().all(Check::holds)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check<T: Sync>(name: &str, cases: &[T], fails: impl Fn(&T) -> Option<String> + Sync + Send) -> Check {
    Check {
        name: name.into(),
        cases: cases.len(),
        failures: cases.par_iter().filter_map(fails).collect(),
    }
}

fn from_result(name: &str, cases: usize, r: Result<()>) -> Check {
    Check {
        name: name.into(),
        cases,
        failures: r.err().map(|e| e.to_string()).into_iter().collect(),
    }
}

/// Every `σ▹α` with `α` top-dimensional: representatives for `h_n` and `h^n`.
pub fn top_generators(x: &SimplicialComplex) -> Vec<Gen> {
    x.simplices(x.dim())
        .iter()
        .flat_map(|a| a.faces().into_iter().map(move |f| Gen { under: x.orient(&f), over: a.clone() }))
        .collect()
}

/// The double complex, `λ`, `κ`, `ε`, `Λ`, `𝔠` and `𝔠^∨` identities.
pub fn double_complex_checks(dc: &DoubleComplex) -> Result<Vec<Check>> {
    let x = dc.complex();
    let ring = dc.ring();
    let eq = |a: &Chain<Gen>, b: &Chain<Gen>| a.reduced(ring) == b.reduced(ring);
    let show = |g: &Gen| g.display(x);
    let gens: Vec<Gen> = dc.generators().cloned().collect();
    let upper: Vec<Gen> = gens.iter().filter(|g| g.under.dim() > 0).cloned().collect();
    let bottom: Vec<Gen> = gens.iter().filter(|g| g.under.dim() == 0).cloned().collect();
    let rel: Vec<Simplex> = dc.relative_simplices().cloned().collect();
    let m = dc.stable_power();
    let unit = |g: &Gen| Chain::unit(g.clone());
    let mut out = vec![
        check("i∘i = 0", &gens, |g| (!dc.i(&dc.i(&unit(g))).reduced(ring).is_zero()).then(|| show(g))),
        check("d∘d = 0", &gens, |g| (!dc.d(&dc.d(&unit(g))).is_zero()).then(|| show(g))),
        check("i∘d = d∘i", &gens, |g| (!eq(&dc.i(&dc.d(&unit(g))), &dc.d(&dc.i(&unit(g))))).then(|| show(g))),
        check("λi + iλ = id on D^{l>0}", &upper, |g| {
            let c = unit(g);
            (!eq(&dc.lambda(&dc.i(&c)).plus(&dc.i(&dc.lambda(&c))), &c)).then(|| show(g))
        }),
        check("κε = id", &rel, |a| {
            let c = Chain::unit(a.clone());
            (dc.kappa(&dc.epsilon(&c)).reduced(ring) != c).then(|| x.display(a))
        }),
        check("εκ = id − λi on D^0", &bottom, |g| {
            let c = unit(g);
            (!eq(&dc.epsilon(&dc.kappa(&c)), &c.clone().minus(&dc.lambda(&dc.i(&c))))).then(|| show(g))
        }),
        check("φ = λ̃ĩφ + ĩλ̃φ on augmented rows", &gens, |g| {
            let c = unit(g);
            let back = if g.under.dim() == 0 {
                dc.epsilon(&dc.kappa(&c))
            } else {
                dc.i(&dc.lambda(&c))
            };
            (!eq(&dc.lambda(&dc.i(&c)).plus(&back), &c)).then(|| show(g))
        }),
        check("Λ on generators", &gens, |g| (!eq(&dc.big_lambda(&unit(g)), &dc.big_lambda_closed(g))).then(|| show(g))),
        check("Λ^m for 1 ≤ m ≤ l", &upper, |g| {
            let mut c = unit(g);
            for p in 1..=g.under.dim() as usize {
                c = dc.big_lambda(&c);
                if !eq(&c, &dc.big_lambda_power_closed(g, p)) {
                    return Some(format!("{} m={p}", show(g)));
                }
            }
            None
        }),
        check("Λ^m for l < m ≤ dim X + 1", &gens, |g| {
            let p = g.under.dim() as usize;
            let mut c = dc.big_lambda_power(&unit(g), p);
            for q in p + 1..=m.max(p + 1) {
                c = dc.big_lambda(&c);
                if !eq(&c, &dc.big_lambda_power_closed(g, q)) {
                    return Some(format!("{} m={q}", show(g)));
                }
            }
            None
        }),
        check("Λ^m idempotent and i⁰Λ^m = 0", &gens, |g| {
            let c = dc.big_lambda_power(&unit(g), m);
            (!eq(&dc.big_lambda(&c), &c) || !dc.i(&c).reduced(ring).is_zero()).then(|| show(g))
        }),
        check("(λi)² = λi and iΛ = 0 on D^0", &bottom, |g| {
            let c = unit(g);
            let li = dc.lambda(&dc.i(&c));
            (!eq(&dc.lambda(&dc.i(&li)), &li) || !dc.i(&dc.big_lambda(&c)).reduced(ring).is_zero()).then(|| show(g))
        }),
        check("𝔠ε = id", &rel, |a| {
            let c = Chain::unit(a.clone());
            (dc.c_map(&dc.epsilon(&c)).reduced(ring) != c).then(|| x.display(a))
        }),
        check("ε𝔠 = Λ^m", &gens, |g| {
            let c = unit(g);
            (!eq(&dc.epsilon(&dc.c_map(&c)), &dc.big_lambda_power(&c, m))).then(|| show(g))
        }),
        check("𝔠 = κΛ^m", &gens, |g| {
            let c = unit(g);
            (dc.c_map(&c).reduced(ring) != dc.kappa(&dc.big_lambda_power(&c, m)).reduced(ring)).then(|| show(g))
        }),
    ];
    let pairs: Vec<(Simplex, Gen)> = rel
        .iter()
        .flat_map(|t| gens.iter().filter(move |g| g.over.dim() - g.under.dim() == t.dim()).map(move |g| (t.clone(), g.clone())))
        .collect();
    out.push(check("𝔠^∨ = Hom(𝔠, R)", &pairs, |(t, g)| {
        let lhs = dc.c_dual(&Chain::unit(t.clone())).coefficient(g);
        let rhs = dc.c_map(&Chain::unit(g.clone())).coefficient(t);
        (ring.reduce(&lhs) != ring.reduce(&rhs)).then(|| format!("{}* on {}", x.display(t), show(g)))
    }));
    out.push(from_result("𝔠 is a chain map", gens.len(), dc.c_chain_map().map(drop)));
    out.push(from_result("ε is a chain map", rel.len(), dc.epsilon_chain_map().map(drop)));
    out.push(from_result("𝔠^∨ is a chain map", rel.len(), dc.c_dual_chain_map().map(drop)));
    Ok(out)
}

/// `σ^*(∂α) = σ_{≤j−1}^*(∂α_{≤j}) σ_{≥j}^*(∂α_{≥j})` for `1 ≤ j ≤ dim σ`.
pub fn face_factorization_check(x: &SimplicialComplex) -> Check {
    let pairs: Vec<(Simplex, Simplex)> = (1..x.dim())
        .flat_map(|p| {
            x.simplices(p)
                .iter()
                .flat_map(move |s| x.simplices(p + 1).iter().map(move |a| (s.clone(), a.clone())))
        })
        .collect();
    check("σ^*(∂α) factorization", &pairs, |(s, a)| {
        let whole = boundary(a).coefficient(s);
        (1..=s.dim() as usize)
            .find(|&j| {
                let left = boundary(&a.front(j)).coefficient(&s.front(j - 1));
                let right = boundary(&a.back(j)).coefficient(&s.back(j));
                left * right != whole
            })
            .map(|j| format!("{} in {} at {j}", x.display(s), x.display(a)))
    })
}

/// Leibniz defects of the three caps on every generator pair.
pub fn leibniz_checks(x: &SimplicialComplex) -> Vec<Check> {
    let gens = top_generators(x);
    let simplices: Vec<Simplex> = x.all_simplices().cloned().collect();
    let unit = |g: &Gen| Chain::unit(g.clone());
    let pairs_v1: Vec<(Gen, Gen)> = pairs(&gens, &gens, |a, b| b.under.dim() <= a.under.dim());
    let pairs_v2: Vec<(Gen, Simplex)> = pairs(&gens, &simplices, |a, t| t.dim() <= a.under.dim());
    let pairs_plain: Vec<(Simplex, Simplex)> = pairs(&simplices, &simplices, |p, t| t.dim() <= p.dim());
    vec![
        check("Leibniz, h^n ⊗ h_n cap", &pairs_v1, |(a, b)| {
            (!leibniz_defect_v1(x, &unit(a), &unit(b)).map(|d| d.is_zero()).unwrap_or(false)).then(|| format!("{} ⌢ {}", a.display(x), b.display(x)))
        }),
        check("Leibniz, h^n ⊗ R cap", &pairs_v2, |(a, t)| {
            (!leibniz_defect_v2(x, &unit(a), &Chain::unit(t.clone())).map(|d| d.is_zero()).unwrap_or(false))
                .then(|| format!("{} ⌢ {}", a.display(x), x.display(t)))
        }),
        check("Leibniz, constant cap", &pairs_plain, |(p, t)| {
            (!leibniz_defect_plain(x, &Chain::unit(p.clone()), &Chain::unit(t.clone())).map(|d| d.is_zero()).unwrap_or(false))
                .then(|| format!("{} ⌢ {}", x.display(p), x.display(t)))
        }),
    ]
}

fn pairs<A: Clone, B: Clone>(a: &[A], b: &[B], keep: impl Fn(&A, &B) -> bool) -> Vec<(A, B)> {
    a.iter()
        .flat_map(|p| b.iter().filter(|q| keep(p, q)).map(move |q| (p.clone(), q.clone())))
        .collect()
}

/// The reordering homotopy identity for every adjacent transposition and
/// every generator pair, for all three caps.
pub fn homotopy_checks(x: &SimplicialComplex) -> Vec<Check> {
    let gens = top_generators(x);
    let simplices: Vec<Simplex> = x.all_simplices().cloned().collect();
    let swaps: Vec<(u32, u32)> = x.order().windows(2).map(|w| (w[0], w[1])).collect();
    let with_swaps = |n: usize| swaps.iter().flat_map(move |s| (0..n).map(move |i| (*s, i))).collect::<Vec<_>>();
    let pv1 = pairs(&gens, &gens, |a, b| b.under.dim() <= a.under.dim());
    let pv2 = pairs(&gens, &simplices, |a, t| t.dim() <= a.under.dim());
    let pp = pairs(&simplices, &simplices, |p, t| t.dim() <= p.dim());
    let name = |(u, w): (u32, u32)| format!("{}↔{}", x.label(u), x.label(w));
    vec![
        check("reordering homotopy, constant cap", &with_swaps(pp.len()), |&((u, w), i)| {
            let (p, t) = &pp[i];
            (!homotopy_defect(x, u, w, p, t).map(|d| d.holds()).unwrap_or(false))
                .then(|| format!("{} on {} ⌢ {}", name((u, w)), x.display(p), x.display(t)))
        }),
        check("reordering homotopy, h^n ⊗ h_n cap", &with_swaps(pv1.len()), |&((u, w), i)| {
            let (a, b) = &pv1[i];
            (!homotopy_defect_v1(x, u, w, a, b).map(|d| d.holds()).unwrap_or(false))
                .then(|| format!("{} on {} ⌢ {}", name((u, w)), a.display(x), b.display(x)))
        }),
        check("reordering homotopy, h^n ⊗ R cap", &with_swaps(pv2.len()), |&((u, w), i)| {
            let (a, t) = &pv2[i];
            (!homotopy_defect_v2(x, u, w, a, t).map(|d| d.holds()).unwrap_or(false))
                .then(|| format!("{} on {} ⌢ {}", name((u, w)), a.display(x), x.display(t)))
        }),
    ]
}

/// `𝔠∘ι = [X]⌢−` and `q∘𝔠^∨ = [X]⌢−`.
pub fn capvsc_checks(dc: &DoubleComplex) -> Result<Vec<Check>> {
    let x = dc.complex();
    let hs = HSheaf::build(x, x.dim() as i32, dc.ring())?;
    let first = capvsc_first(dc, &hs)?;
    let second = capvsc_second(x, dc.subcomplex(), dc.ring())?;
    Ok(vec![
        Check {
            name: "𝔠∘ι = [X]⌢−".into(),
            cases: first.checked,
            failures: first.mismatches,
        },
        Check {
            name: "q∘𝔠^∨ = [X]⌢−".into(),
            cases: second.checked,
            failures: second.mismatches,
        },
    ])
}

/// Everything above for `(X, L)`; `x` must have `L^vc` before `L`.
pub fn sweep(x: &SimplicialComplex, l: &Subcomplex, ring: Ring) -> Result<IdentityReport> {
    let dc = DoubleComplex::new(x, l, ring)?;
    let mut checks = double_complex_checks(&dc)?;
    checks.push(face_factorization_check(x));
    checks.extend(capvsc_checks(&dc)?);
    checks.extend(leibniz_checks(x));
    checks.extend(homotopy_checks(x));
    Ok(IdentityReport {
        ring,
        order: x.order_labels(),
        subcomplex: l.labels(x),
        checks,
    })
}
