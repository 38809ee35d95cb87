//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are visible; exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use cmdual::algebra::Ring;
use cmdual::complex::{parse_filtration, Region, SimplicialComplex, Subcomplex};
use cmdual::fixtures;
use cmdual::functor::{check_star_local, fundamental_class_preserved, verify_naturality, SimplicialMap, StarLocalMap};
use cmdual::identities::{capvsc_checks, double_complex_checks, homotopy_checks, leibniz_checks, sweep, Check};
use cmdual::local::{link_crosscheck, uct_check};
use cmdual::mv::{hypothesis_witnesses, orientation_independence, verify_duality, DoubleComplex, Item};
use cmdual::report::Group;
use cmdual::sections::{compactly_determined_dual, lf_h0_check, semistability_check, RestrictionSystem};
use cmdual::simplicial::chains;
use cmdual::Error;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_hold(what: &str, checks: &[Check]) -> Result<usize, String> {
    let mut cases = 0;
    for c in checks {
        ensure(c.cases > 0, || format!("{what}: `{}` ran no cases", c.name))?;
        ensure(c.holds(), || format!("{what}: `{}` fails on {:?}", c.name, &c.failures[..c.failures.len().min(3)]))?;
        cases += c.cases;
    }
    Ok(cases)
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn sub(x: &SimplicialComplex, labels: &[&str]) -> Subcomplex {
    Subcomplex::from_labels(x, labels).unwrap()
}

fn dc(x: &SimplicialComplex, l: &Subcomplex, ring: Ring) -> Result<DoubleComplex, String> {
    DoubleComplex::new(&l.orient_vc_before(x), l, ring).map_err(|e| e.to_string())
}

fn err(e: Error) -> String {
    e.to_string()
}

fn identity_sweep() -> Verdict {
    let start = Instant::now();
    let x = fixtures::t4();
    let r = sweep(&x, &Subcomplex::whole(&x), Ring::Integers).map_err(err)?;
    let names = [
        "λi + iλ = id on D^{l>0}",
        "κε = id",
        "εκ = id − λi on D^0",
        "φ = λ̃ĩφ + ĩλ̃φ on augmented rows",
        "Λ on generators",
        "Λ^m for 1 ≤ m ≤ l",
        "Λ^m for l < m ≤ dim X + 1",
        "Λ^m idempotent and i⁰Λ^m = 0",
    ];
    let wanted: Vec<Check> = names.iter().map(|n| r.get(n).cloned().ok_or_else(|| format!("missing `{n}`"))).collect::<Result<_, _>>()?;
    let cases = all_hold("T4", &wanted)?;
    ensure(r.holds(), || "another identity of the sweep fails".into())?;
    within(start, Duration::from_secs(5))?;
    Ok(format!("{cases} generator cases, full sweep in {:.2?}", start.elapsed()))
}

fn leibniz() -> Verdict {
    let start = Instant::now();
    let mut cases = 0;
    for (name, x) in [("C3", fixtures::c3()), ("Δ²", fixtures::triangle()), ("T4", fixtures::t4()), ("RP6", fixtures::rp6())] {
        cases += all_hold(name, &leibniz_checks(&x))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("{cases} generator pairs, zero defect"))
}

fn c_suite() -> Verdict {
    let names = ["𝔠ε = id", "ε𝔠 = Λ^m", "𝔠 = κΛ^m", "𝔠^∨ = Hom(𝔠, R)"];
    let mut cases = 0;
    let t4 = fixtures::t4();
    let edge = sub(&t4, &["2", "3"]);
    let mut runs: Vec<(&str, SimplicialComplex, Subcomplex)> =
        fixtures::all().into_iter().map(|(n, x)| (n, x.clone(), Subcomplex::whole(&x))).collect();
    runs.push(("T4, edge", t4, edge));
    for (name, x, l) in runs {
        let checks = double_complex_checks(&dc(&x, &l, Ring::Integers)?).map_err(err)?;
        let picked: Vec<Check> = checks.into_iter().filter(|c| names.contains(&c.name.as_str())).collect();
        ensure(picked.len() == names.len(), || format!("{name}: missing checks"))?;
        cases += all_hold(name, &picked)?;
    }
    Ok(format!("{cases} generator cases on every fixture"))
}

fn capvsc() -> Verdict {
    let (c3, t4, rp6) = (fixtures::c3(), fixtures::t4(), fixtures::rp6());
    let mut cases = 0;
    for (name, x, l) in [
        ("(C3, X)", &c3, Subcomplex::whole(&c3)),
        ("(T4, edge)", &t4, sub(&t4, &["2", "3"])),
        ("(RP6, X)", &rp6, Subcomplex::whole(&rp6)),
    ] {
        let checks = capvsc_checks(&dc(x, &l, Ring::Integers)?).map_err(err)?;
        // C^*_c(X, X) is zero, so the second comparison is empty when L = X
        let proper = l.vertices().len() < x.vertex_count();
        let nonempty: Vec<Check> = checks.iter().filter(|c| proper || !c.name.starts_with("q∘")).cloned().collect();
        all_hold(name, &nonempty)?;
        for c in &checks {
            ensure(c.holds(), || format!("{name}: `{}` fails on {:?}", c.name, c.failures))?;
            cases += c.cases;
        }
    }
    Ok(format!("{cases} generators, chain-level equality"))
}

/// `H_k(X)` from the plain simplicial chain complex, as an independent oracle.
fn classical(x: &SimplicialComplex, k: i32, ring: Ring) -> Result<Group, String> {
    let c = chains(x, &Region::Whole, ring).map_err(err)?;
    Ok(Group::new(&c.complex.homology(k), &[]))
}

fn duality_verdicts() -> Verdict {
    let start = Instant::now();
    let summary = |g: &Group| (g.rank, g.torsion.clone());

    let c3 = fixtures::c3();
    let r = verify_duality(&c3, &Subcomplex::whole(&c3), Item::I1ai, Ring::Integers).map_err(err)?;
    ensure(r.iso && r.ranks() == [1, 1], || format!("C3 1ai: {:?}", r.ranks()))?;
    for d in &r.degrees {
        ensure(d.source.torsion.is_empty() && d.target.torsion.is_empty(), || "C3: torsion".into())?;
    }

    let t4 = fixtures::t4();
    let r = verify_duality(&t4, &Subcomplex::empty(), Item::I2bii, Ring::Integers).map_err(err)?;
    ensure(r.iso && r.ranks() == [1, 0, 1], || format!("T4 2bii: {:?}", r.ranks()))?;

    let rp6 = fixtures::rp6();
    let whole = Subcomplex::whole(&rp6);
    let f2 = verify_duality(&rp6, &whole, Item::I1ai, Ring::PrimeField(2)).map_err(err)?;
    ensure(f2.iso && f2.ranks() == [1, 1, 1], || format!("RP6 over F_2: {:?}", f2.ranks()))?;
    let z = verify_duality(&rp6, &whole, Item::I1ai, Ring::Integers).map_err(err)?;
    ensure(z.iso, || "RP6 over Z not iso".into())?;
    for d in &z.degrees {
        let want = classical(&rp6, 2 - d.l, Ring::Integers)?;
        ensure(summary(&d.source) == summary(&want) && summary(&d.target) == summary(&want), || {
            format!("RP6 over Z, l = {}: {} → {}, classical {}", d.l, d.source.summary(), d.target.summary(), want.summary())
        })?;
    }
    ensure(z.degrees[0].source.summary() == "0" && z.degrees[1].source.torsion == ["2"], || "RP6 over Z: H_2, H_1".into())?;

    let bowtie = fixtures::bowtie();
    let b = Subcomplex::whole(&bowtie);
    match verify_duality(&bowtie, &b, Item::I1ai, Ring::Integers) {
        Err(Error::Hypothesis(_)) => {}
        other => return Err(format!("bowtie not refused: {:?}", other.map(|r| r.iso))),
    }
    let w = hypothesis_witnesses(&bowtie, &b, Item::I1ai, Ring::Integers).map_err(err)?;
    ensure(w.iter().any(|w| w.simplex.as_deref() == Some("[0]")), || format!("bowtie witnesses {w:?}"))?;
    within(start, Duration::from_secs(30))?;
    Ok(format!("C3 [1,1], T4 [1,0,1], RP6 F_2 [1,1,1], RP6 Z 0/Z2/Z, bowtie refused at [0] in {:.2?}", start.elapsed()))
}

fn munkres() -> Verdict {
    let mut n = 0;
    for (name, x) in fixtures::all() {
        for s in x.all_simplices() {
            ensure(link_crosscheck(&x, s, Ring::Integers).map_err(err)?, || format!("{name} at {}", x.display(s)))?;
            n += 1;
        }
    }
    Ok(format!("{n} simplices"))
}

fn uct() -> Verdict {
    let mut n = 0;
    for (name, x) in [("C3", fixtures::c3()), ("T4", fixtures::t4()), ("RP6", fixtures::rp6())] {
        for s in x.all_simplices() {
            let u = uct_check(&x, s, x.dim() as i32, Ring::Integers).map_err(err)?;
            ensure(u.holds(), || format!("{name} at {}: {u:?}", x.display(s)))?;
            n += 1;
        }
    }
    Ok(format!("{n} simplices, perfect pairing"))
}

fn reordering() -> Verdict {
    let mut cases = 0;
    for (name, x) in fixtures::all() {
        cases += all_hold(name, &homotopy_checks(&x))?;
    }
    let mut compared = 0;
    for (name, x) in fixtures::all() {
        let l = Subcomplex::whole(&x);
        let order = x.order();
        for j in 0..order.len().saturating_sub(1) {
            let mut swapped = order.clone();
            swapped.swap(j, j + 1);
            let y = x.reoriented(&swapped).map_err(err)?;
            for item in Item::ALL {
                match orientation_independence(&x, &y, &l, item, Ring::Integers) {
                    Ok(same) => {
                        ensure(same.iter().all(|s| *s), || format!("{name}, {item}, swap {j}: {same:?}"))?;
                        compared += 1;
                    }
                    Err(Error::Hypothesis(_)) | Err(Error::TorsionStalk(_)) => {}
                    Err(e) => return Err(format!("{name}, {item}: {e}")),
                }
            }
        }
    }
    Ok(format!("{cases} homotopy cases, {compared} conjugated induced maps equal"))
}

fn functoriality() -> Verdict {
    let (hex, c3) = (fixtures::hex(), fixtures::c3());
    let map = SimplicialMap::parse(&hex, &c3, fixtures::HEX_TO_C3).map_err(err)?;
    let cert = check_star_local(&map).map_err(|f| format!("not star-local: {f:?}"))?;
    let f = StarLocalMap::new(map).map_err(err)?;
    ensure(fundamental_class_preserved(&f), || "f^!([C3]) ≠ [HEX]".into())?;
    let k = Subcomplex::whole(&c3);
    let (mut co, mut contra) = (0, 0);
    for item in Item::ALL {
        let r = verify_naturality(&f, &k, item, Ring::Integers).map_err(err)?;
        ensure(r.commutes, || format!("{item} square does not commute"))?;
        if item.covariant() {
            co += 1;
        } else {
            contra += 1;
        }
    }
    Ok(format!("{} stars certified, [HEX] = f^![C3], {co} covariant and {contra} contravariant squares commute", cert.stars()))
}

fn sections() -> Verdict {
    for (name, x) in [("C3", fixtures::c3()), ("T4", fixtures::t4())] {
        let r = lf_h0_check(&x, &Subcomplex::whole(&x), Ring::Integers).map_err(err)?;
        ensure(r.iso && r.well_defined, || format!("{name}: lf H_0 comparison not iso"))?;
    }
    let c3 = fixtures::c3();
    let stages = parse_filtration("stage: 0\nstage: 0 1\nstage: 0 1 2", &c3).map_err(err)?;
    let c = compactly_determined_dual(&c3, &stages, Ring::Integers).map_err(err)?;
    ensure(c.iso, || "colimit comparison not iso".into())?;
    let doubling = semistability_check(&RestrictionSystem::multiplication(Ring::Integers, 2, 5));
    ensure(!doubling.semistable && !doubling.stages[0].stabilized, || "×2 reported stabilizing".into())?;
    Ok("C3 and T4 iso, colimit iso, ×2 over Z non-stabilizing".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("identity sweep on T4", identity_sweep),
        ("Leibniz sweep", leibniz),
        ("𝔠-suite", c_suite),
        ("capvsc", capvsc),
        ("duality verdicts", duality_verdicts),
        ("link cross-check", munkres),
        ("universal coefficients", uct),
        ("reordering homotopy and orientation independence", reordering),
        ("functoriality", functoriality),
        ("sections", sections),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match verdict {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail} [{t:.2?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {why} [{t:.2?}]", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
