use indexmap::IndexSet;
use proptest::prelude::*;

use super::*;
use crate::algebra::Ring;
use crate::complex::Subcomplex;
use crate::fixtures;
use crate::local::{HCosheaf, HSheaf};
use crate::sheaf::{parse_cosheaf, transported_basis, CombinatorialCosheaf};

fn s(x: &SimplicialComplex, ids: &[&str]) -> Simplex {
    x.simplex_by_labels(ids).unwrap()
}

fn g(x: &SimplicialComplex, under: &[&str], over: &[&str]) -> Gen {
    Gen::new(s(x, under), s(x, over)).unwrap()
}

/// Every `σ▹α` with `α` top-dimensional.
fn top_gens(x: &SimplicialComplex) -> Vec<Gen> {
    let n = x.dim();
    x.simplices(n)
        .iter()
        .flat_map(|a| a.faces().into_iter().map(move |f| Gen { under: x.orient(&f), over: a.clone() }))
        .collect()
}

fn all_simplices(x: &SimplicialComplex) -> Vec<Simplex> {
    x.all_simplices().cloned().collect()
}

#[test]
fn first_cap_examples() {
    let x = fixtures::c3();
    let xi = Chain::unit(g(&x, &["0", "1"], &["0", "1"]));
    let hit = cap_v1(&xi, &Chain::unit(g(&x, &["1"], &["0", "1"]))).unwrap();
    assert_eq!(hit, Chain::unit(s(&x, &["0", "1"])));
    assert!(cap_v1(&xi, &Chain::unit(g(&x, &["0"], &["0", "1"]))).unwrap().is_zero());
}

#[test]
fn second_cap_examples() {
    let x = fixtures::c3();
    let xi = Chain::unit(g(&x, &["0", "1"], &["0", "1"]));
    let top = cap_v2(&xi, &Chain::unit(s(&x, &["0", "1"]))).unwrap();
    assert_eq!(top, Chain::unit(g(&x, &["0"], &["0", "1"])));
    let last = cap_v2(&xi, &Chain::unit(s(&x, &["1"]))).unwrap();
    assert_eq!(last, xi);
    assert!(cap_v2(&xi, &Chain::unit(s(&x, &["0"]))).unwrap().is_zero());
}

#[test]
fn degree_mismatch() {
    let x = fixtures::c3();
    let xi = Chain::unit(g(&x, &["0"], &["0", "1"]));
    let phi = Chain::unit(s(&x, &["0", "1"]));
    assert!(matches!(cap_v2(&xi, &phi), Err(Error::DegreeMismatch { k: 0, l: 1 })));
    let mut mixed = Chain::unit(s(&x, &["0"]));
    mixed.add_signed(s(&x, &["0", "1"]), 1);
    assert!(matches!(cap_plain(&Chain::unit(s(&x, &["0", "1"])), &mixed), Err(Error::Shape(_))));
}

#[test]
fn leibniz_on_all_generator_pairs() {
    for (name, x) in fixtures::all() {
        let gens = top_gens(&x);
        let simplices = all_simplices(&x);
        for a in &gens {
            let xi = Chain::unit(a.clone());
            for b in gens.iter().filter(|b| b.under.dim() <= a.under.dim()) {
                let d = leibniz_defect_v1(&x, &xi, &Chain::unit(b.clone())).unwrap();
                assert!(d.is_zero(), "{name}: {} ⌢ {}", a.display(&x), b.display(&x));
            }
            for t in simplices.iter().filter(|t| t.dim() <= a.under.dim()) {
                let d = leibniz_defect_v2(&x, &xi, &Chain::unit(t.clone())).unwrap();
                assert!(d.is_zero(), "{name}: {} ⌢ {}", a.display(&x), x.display(t));
            }
        }
        for p in &simplices {
            for t in simplices.iter().filter(|t| t.dim() <= p.dim()) {
                let d = leibniz_defect_plain(&x, &Chain::unit(p.clone()), &Chain::unit(t.clone())).unwrap();
                assert!(d.is_zero(), "{name}");
            }
        }
    }
}

#[test]
fn closed_inputs_give_cycles() {
    let x = fixtures::t4();
    let hc = HCosheaf::build(&x, 2, Ring::Integers).unwrap();
    let hs = HSheaf::build(&x, 2, Ring::Integers).unwrap();
    let fundamental: Chain<Gen> = x.simplices(2).iter().map(|a| (Gen::diagonal(a.clone()), int(1))).collect();
    assert!(hc.project(&cosheaf_boundary(&fundamental)).is_zero());
    let sections = crate::sheaf::sections(&x, hs.sheaf(), &Subcomplex::whole(&x)).unwrap();
    assert_eq!(sections.rank(), 1);
    let z = cap_v1(&fundamental, &hs.expand(&sections.basis[0])).unwrap();
    assert!(simplicial_boundary(&z).is_zero());
    let c = crate::simplicial::chains(&x, &crate::complex::Region::Whole, Ring::Integers).unwrap();
    let h = c.complex.homology(2);
    let coords = h.coordinates(&z.to_vector(c.basis.at(2))).unwrap();
    assert!(coords[0] == int(1) || coords[0] == int(-1));
}

fn subsets(x: &SimplicialComplex) -> Vec<Subcomplex> {
    let n = x.vertex_count() as u32;
    (0u32..(1 << n)).map(|m| Subcomplex::spanned_by((0..n).filter(|v| m & (1 << v) != 0))).collect()
}

#[test]
fn relative_caps_land_in_their_targets() {
    for (_, x0) in fixtures::all().into_iter().filter(|(_, x)| x.vertex_count() <= 7) {
        for l in subsets(&x0) {
            let x = l.orient_vc_before(&x0);
            let vc = l.complement(&x);
            let gens = top_gens(&x);
            for a in &gens {
                let xi = Chain::unit(a.clone());
                for b in gens.iter().filter(|b| b.under.dim() <= a.under.dim()) {
                    let phi = Chain::unit(b.clone());
                    if l.contains(&b.under) {
                        let out = relative_cap_v1(&x, &l, RelativeVariant::Two, &xi, &phi).unwrap();
                        assert!(out.support().all(|t| !vc.contains(t)));
                    } else {
                        relative_cap_v1(&x, &l, RelativeVariant::One, &xi, &phi).unwrap();
                    }
                }
                for t in x.all_simplices().filter(|t| t.dim() <= a.under.dim()) {
                    let psi = Chain::unit(t.clone());
                    let v = if l.contains(t) { RelativeVariant::Four } else { RelativeVariant::Three };
                    relative_cap_v2(&x, &l, v, &xi, &psi).unwrap();
                }
            }
        }
    }
}

#[test]
fn relative_cap_on_circle() {
    let x = fixtures::c3();
    let l = Subcomplex::from_labels(&x, &["2"]).unwrap();
    let fundamental: Chain<Gen> = x.simplices(1).iter().map(|a| (Gen::diagonal(a.clone()), int(1))).collect();
    let mut phi = Chain::unit(g(&x, &["2"], &["0", "2"]));
    phi.add_signed(g(&x, &["2"], &["1", "2"]), -1);
    let out = relative_cap_v1(&x, &l, RelativeVariant::Two, &fundamental, &phi).unwrap();
    let mut expected = Chain::unit(s(&x, &["0", "2"]));
    expected.add_signed(s(&x, &["1", "2"]), -1);
    assert_eq!(out, expected);

    let wrong = Subcomplex::from_labels(&x, &["0"]).unwrap();
    let err = relative_cap_v1(&x, &wrong, RelativeVariant::Two, &fundamental, &Chain::new());
    assert!(matches!(err, Err(Error::Orientation(_))));
    let err = relative_cap_v1(&x, &l, RelativeVariant::One, &fundamental, &phi);
    assert!(matches!(err, Err(Error::Hypothesis(_))));
}

#[test]
fn constant_coefficients_reduce_to_plain_caps() {
    let x = fixtures::t4();
    let g0 = CombinatorialCosheaf::constant(&x, Ring::Integers);
    let f0 = crate::sheaf::CombinatorialSheaf::constant(&x, Ring::Integers);
    let gens = top_gens(&x);
    for a in &gens {
        let xi = Chain::unit(a.clone());
        for b in gens.iter().filter(|b| b.under.dim() <= a.under.dim()) {
            let plain = cap_v1(&xi, &Chain::unit(b.clone())).unwrap();
            let with = g_cap(&g0, &xi, &Chain::unit((b.clone(), 0))).unwrap();
            assert_eq!(with, plain.map(|t| Chain::unit((t.clone(), 0))));
        }
        for t in x.all_simplices().filter(|t| t.dim() <= a.under.dim()) {
            let plain = cap_v2(&xi, &Chain::unit(t.clone())).unwrap();
            let with = f_cap(&f0, &xi, &Chain::unit((t.clone(), 0))).unwrap();
            assert_eq!(with, plain.map(|h| Chain::unit((h.clone(), 0))));
        }
    }
}

/// Coordinates of `c` against a transported basis.
fn vector<T: Ord + Clone + std::hash::Hash>(basis: &IndexSet<T>, c: &Chain<T>) -> Vec<crate::algebra::Scalar> {
    c.to_vector(basis)
}

fn check_g_cap(x: &SimplicialComplex, gsheaf: &CombinatorialCosheaf, xi: &Chain<Gen>, l: isize) {
    let source: IndexSet<Gen> = top_gens(x).into_iter().filter(|b| b.under.dim() == l).collect();
    let m = g_cap_morphism(xi, source.clone()).unwrap();
    let t = m.g_transport(gsheaf).unwrap();
    let src = transported_basis(m.source(), |s| gsheaf.rank(s));
    let tgt = transported_basis(m.target(), |s| gsheaf.rank(s));
    for (j, (b, i)) in src.iter().enumerate() {
        let out = g_cap(gsheaf, xi, &Chain::unit((b.clone(), *i))).unwrap();
        let out: Chain<(Gen, usize)> = out.map(|(r, a)| Chain::unit((Gen::plain(r.clone()), *a)));
        assert_eq!(vector(&tgt, &out), t.column(j));
    }
}

#[test]
fn g_cap_is_transport_of_the_plain_cap() {
    let x = fixtures::c3();
    let h1 = HCosheaf::build(&x, 1, Ring::Integers).unwrap();
    let fundamental: Chain<Gen> = x.simplices(1).iter().map(|a| (Gen::diagonal(a.clone()), int(1))).collect();
    for l in 0..=1 {
        check_g_cap(&x, h1.cosheaf(), &fundamental, l);
    }
    let t = fixtures::triangle();
    let text = "stalk: [0,1,2] rank 2\nstalk: [0,1] rank 1\nmap: [0,1,2] > [0,1] matrix [[1,1]]\n";
    let gsheaf = parse_cosheaf(text, &t, Ring::Integers).unwrap();
    let xi: Chain<Gen> = top_gens(&t).into_iter().filter(|g| g.under.dim() == 2).map(|g| (g, int(1))).collect();
    for l in 0..=2 {
        check_g_cap(&t, &gsheaf, &xi, l);
    }
}

#[test]
fn f_cap_is_transport_of_the_plain_cap() {
    let x = fixtures::t4();
    let h2 = HSheaf::build(&x, 2, Ring::Integers).unwrap();
    let f = h2.sheaf();
    let fundamental: Chain<Gen> = x.simplices(2).iter().map(|a| (Gen::diagonal(a.clone()), int(1))).collect();
    for l in 0..=2 {
        let source: IndexSet<Gen> = x.simplices(l).iter().map(|t| Gen::plain(t.clone())).collect();
        let m = f_cap_morphism(&fundamental, source).unwrap();
        let t = m.f_transport(f).unwrap();
        let src = transported_basis(m.source(), |s| f.rank(s));
        let tgt = transported_basis(m.target(), |s| f.rank(s));
        for (j, (b, i)) in src.iter().enumerate() {
            let out = f_cap(f, &fundamental, &Chain::unit((b.over.clone(), *i))).unwrap();
            assert_eq!(vector(&tgt, &out), t.column(j));
        }
    }
}

#[test]
fn homotopy_on_the_full_triangle() {
    let x = fixtures::triangle();
    let (u, w) = (x.vertex_id("1").unwrap(), x.vertex_id("2").unwrap());
    let d = homotopy_defect(&x, u, w, &s(&x, &["0", "1", "2"]), &s(&x, &["1", "2"])).unwrap();
    assert!(d.holds());
    assert!(!d.lhs.is_zero());
    let far = homotopy_defect(&x, u, w, &s(&x, &["0", "1"]), &s(&x, &["0"])).unwrap();
    assert!(far.lhs.is_zero() && far.rhs.is_zero());
    let (a, c) = (x.vertex_id("0").unwrap(), x.vertex_id("2").unwrap());
    assert!(matches!(homotopy_defect(&x, a, c, &s(&x, &["0"]), &s(&x, &["0"])), Err(Error::Orientation(_))));
}

#[test]
fn homotopy_identity_for_every_adjacent_swap() {
    for (name, x) in fixtures::all().into_iter().filter(|(_, x)| x.dim() <= 2) {
        let order = x.order();
        let gens = top_gens(&x);
        let simplices = all_simplices(&x);
        for pair in order.windows(2) {
            let (u, w) = (pair[0], pair[1]);
            for p in &simplices {
                for t in simplices.iter().filter(|t| t.dim() <= p.dim()) {
                    assert!(homotopy_defect(&x, u, w, p, t).unwrap().holds(), "{name}");
                }
            }
            for a in &gens {
                for b in gens.iter().filter(|b| b.under.dim() <= a.under.dim()) {
                    assert!(homotopy_defect_v1(&x, u, w, a, b).unwrap().holds(), "{name} v1");
                }
                for t in simplices.iter().filter(|t| t.dim() <= a.under.dim()) {
                    assert!(homotopy_defect_v2(&x, u, w, a, t).unwrap().holds(), "{name} v2");
                }
            }
        }
    }
}

fn random_chain<T: Ord + Clone>(items: &[T], coeffs: &[i64]) -> Chain<T> {
    items.iter().zip(coeffs).map(|(t, c)| (t.clone(), int(*c))).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn leibniz_on_random_t4_inputs(k in 0isize..=2, l in 0isize..=2, cx in proptest::collection::vec(-3i64..=3, 12), cp in proptest::collection::vec(-3i64..=3, 12)) {
        prop_assume!(l <= k);
        let x = fixtures::t4();
        let gens = top_gens(&x);
        let a: Vec<Gen> = gens.iter().filter(|g| g.under.dim() == k).cloned().collect();
        let b: Vec<Gen> = gens.iter().filter(|g| g.under.dim() == l).cloned().collect();
        let xi = random_chain(&a, &cx);
        let phi = random_chain(&b, &cp);
        prop_assert!(leibniz_defect_v1(&x, &xi, &phi).unwrap().is_zero());
        let psi = random_chain(x.simplices(l), &cp);
        prop_assert!(leibniz_defect_v2(&x, &xi, &psi).unwrap().is_zero());
    }
}
