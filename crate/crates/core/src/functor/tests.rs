use super::*;
use crate::fixtures;

fn covering(order: &[&str]) -> StarLocalMap {
    let x = fixtures::hex().reoriented_by_labels(order).unwrap();
    StarLocalMap::new(SimplicialMap::parse(&x, &fixtures::c3(), fixtures::HEX_TO_C3).unwrap()).unwrap()
}

const PRESERVING: [&str; 6] = ["0", "1", "3", "4", "2", "5"];

#[test]
fn hexagon_covers_the_triangle() {
    let f = covering(&PRESERVING);
    assert_eq!(f.certificate().stars(), 12);
    assert!(f.map().is_orientation_preserving());
    assert!(f.map().face_compatibility().holds());
    let v0 = f.map().target().simplex_by_labels(&["0"]).unwrap();
    assert_eq!(f.certificate().fibre(&v0).len(), 2);
}

#[test]
fn collapse_is_not_star_local() {
    let x = fixtures::c3();
    let p = fixtures::point();
    let pairs: Vec<(String, String)> = ["0", "1", "2"].iter().map(|v| (v.to_string(), "0".to_string())).collect();
    let f = SimplicialMap::new(&x, &p, &pairs).unwrap();
    let e = check_star_local(&f).unwrap_err();
    assert!(!e.preimage.is_empty());
    assert!(matches!(StarLocalMap::new(f), Err(Error::NotStarLocal(_))));
}

#[test]
fn maps_must_be_simplicial() {
    let x = fixtures::two_edges();
    let y = fixtures::two_edges();
    let pairs: Vec<(String, String)> = [("0", "0"), ("1", "2"), ("2", "2"), ("3", "3")].iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert!(matches!(SimplicialMap::new(&x, &y, &pairs), Err(Error::NotSimplicial(_))));
    assert!(matches!(SimplicialMap::new(&x, &y, &pairs[..3]), Err(Error::Usage(_))));
}

#[test]
fn identity_is_star_local() {
    for (_, x) in fixtures::all() {
        let f = StarLocalMap::new(SimplicialMap::identity(&x)).unwrap();
        let gens = all_gens(&x);
        for g in &gens {
            let c = Chain::unit(g.clone());
            assert_eq!(f.shriek_down(&c), c);
            assert_eq!(f.shriek_up(&c), c);
        }
        assert!(fundamental_class_preserved(&f));
    }
}

#[test]
fn pushforward_of_the_hexagon_cycle() {
    let f = covering(&PRESERVING);
    let (x, y) = (f.map().source(), f.map().target());
    let cycle = |z: &SimplicialComplex, edges: &[[&str; 2]]| -> Chain<Simplex> {
        edges
            .iter()
            .map(|e| {
                let s = z.simplex_by_labels(e).unwrap();
                let sg = z.permutation_sign(&Simplex::from_ordered(e.iter().map(|l| z.vertex_id(l).unwrap()).collect()));
                (s, int(sg))
            })
            .collect()
    };
    let hex = cycle(x, &[["0", "1"], ["1", "2"], ["2", "3"], ["3", "4"], ["4", "5"], ["5", "0"]]);
    let tri = cycle(y, &[["0", "1"], ["1", "2"], ["2", "0"]]);
    assert!(crate::cap::simplicial_boundary(&hex).is_zero());
    assert_eq!(f.map().pushforward_chain(&hex).unwrap(), tri.scaled(&int(2)));
}

#[test]
fn edge_sign_is_the_orientation_index() {
    let f = covering(&["0", "1", "2", "3", "4", "5"]);
    let (x, y) = (f.map().source(), f.map().target());
    let e = x.simplex_by_labels(&["2", "3"]).unwrap();
    assert_eq!(f.map().ind(&e), Some(-1));
    let img = f.map().pushforward_chain(&Chain::unit(e)).unwrap();
    assert_eq!(img, Chain::term(y.simplex_by_labels(&["0", "2"]).unwrap(), int(-1)));
    assert!(!f.map().is_orientation_preserving());
    assert!(f.map().face_compatibility().holds());
}

#[test]
fn shriek_up_lifts_to_both_sheets() {
    let f = covering(&PRESERVING);
    let (x, y) = (f.map().source(), f.map().target());
    let g = |z: &SimplicialComplex, u: &[&str], o: &[&str]| Gen::new(z.simplex_by_labels(u).unwrap(), z.simplex_by_labels(o).unwrap()).unwrap();
    let up = f.shriek_up(&Chain::unit(g(y, &["0"], &["0", "1"])));
    let want: Chain<Gen> = [(g(x, &["0"], &["0", "1"]), int(1)), (g(x, &["3"], &["3", "4"]), int(1))].into_iter().collect();
    assert_eq!(up, want);
    assert!(fundamental_class_preserved(&f));
}

#[test]
fn squares_commute_for_the_covering() {
    for order in [PRESERVING, ["0", "1", "2", "3", "4", "5"]] {
        let f = covering(&order);
        let y = f.map().target();
        for item in Item::ALL {
            let r = verify_naturality(&f, &Subcomplex::whole(y), item, Ring::Integers).unwrap();
            assert!(r.commutes, "{item} {order:?}: {r:?}");
            assert_eq!(r.chain_level.is_empty(), order != PRESERVING);
        }
    }
}

#[test]
fn squares_commute_over_a_proper_subcomplex() {
    let y = fixtures::c3();
    let k = Subcomplex::from_labels(&y, &["1", "2"]).unwrap();
    let x = fixtures::hex().reoriented_by_labels(&["0", "3", "1", "4", "2", "5"]).unwrap();
    let f = StarLocalMap::new(SimplicialMap::parse(&x, &y, fixtures::HEX_TO_C3).unwrap()).unwrap();
    for item in Item::ALL {
        let r = verify_naturality(&f, &k, item, Ring::Integers).unwrap();
        assert!(r.commutes, "{item}: {r:?}");
    }
}
