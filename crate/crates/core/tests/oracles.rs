//! Values checked against oracles that share no code with the library:
//! textbook Betti numbers and a bitset elimination over 𝔽_2.

use cmdual::algebra::Ring;
use cmdual::complex::{Region, SimplicialComplex, Subcomplex};
use cmdual::fixtures;
use cmdual::mv::{verify_duality, Item};
use cmdual::report::Group;
use cmdual::simplicial::chains;

/// Rank over 𝔽_2 of the boundary map from k-simplices to (k−1)-simplices.
fn f2_boundary_rank(x: &SimplicialComplex, k: isize) -> usize {
    if k <= 0 {
        return 0;
    }
    let rows = x.simplices(k - 1);
    let mut vectors: Vec<Vec<u64>> = x
        .simplices(k)
        .iter()
        .map(|s| {
            let mut v = vec![0u64; rows.len() / 64 + 1];
            for f in rows.iter().enumerate().filter(|(_, f)| f.vertices().iter().all(|u| s.vertices().contains(u))) {
                v[f.0 / 64] |= 1 << (f.0 % 64);
            }
            v
        })
        .collect();
    let mut rank = 0;
    for bit in 0..rows.len() {
        let (w, b) = (bit / 64, 1u64 << (bit % 64));
        if let Some(p) = (rank..vectors.len()).find(|&i| vectors[i][w] & b != 0) {
            vectors.swap(rank, p);
            let pivot = vectors[rank].clone();
            for v in vectors.iter_mut().skip(rank + 1) {
                if v[w] & b != 0 {
                    v.iter_mut().zip(&pivot).for_each(|(a, p)| *a ^= p);
                }
            }
            rank += 1;
        }
    }
    rank
}

fn f2_betti(x: &SimplicialComplex) -> Vec<usize> {
    (0..=x.dim()).map(|k| x.simplices(k).len() - f2_boundary_rank(x, k) - f2_boundary_rank(x, k + 1)).collect()
}

fn homology(x: &SimplicialComplex, ring: Ring) -> Vec<String> {
    let c = chains(x, &Region::Whole, ring).unwrap();
    (0..=x.dim() as i32).map(|k| Group::new(&c.complex.homology(k), &[]).summary()).collect()
}

#[test]
fn textbook_homology() {
    let expect: [(&str, SimplicialComplex, [&str; 3]); 6] = [
        ("circle", fixtures::c3(), ["R^1", "R^1", ""]),
        ("disc", fixtures::triangle(), ["R^1", "0", "0"]),
        ("sphere", fixtures::t4(), ["R^1", "0", "R^1"]),
        ("projective plane", fixtures::rp6(), ["R^1", "R/2", "0"]),
        ("bowtie", fixtures::bowtie(), ["R^1", "0", "0"]),
        ("hexagon", fixtures::hex(), ["R^1", "R^1", ""]),
    ];
    for (name, x, want) in expect {
        let want: Vec<&str> = want.into_iter().filter(|w| !w.is_empty()).collect();
        assert_eq!(homology(&x, Ring::Integers), want, "{name}");
    }
}

#[test]
fn mod_two_betti_numbers_agree_with_elimination() {
    for (name, x) in fixtures::all() {
        let ranks: Vec<usize> = {
            let c = chains(&x, &Region::Whole, Ring::PrimeField(2)).unwrap();
            (0..=x.dim() as i32).map(|k| c.complex.homology(k).len()).collect()
        };
        assert_eq!(ranks, f2_betti(&x), "{name}");
    }
    assert_eq!(f2_betti(&fixtures::rp6()), [1, 1, 1]);
}

#[test]
fn euler_characteristic() {
    for (name, x) in fixtures::all() {
        let chi: i64 = x.f_vector().iter().enumerate().map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) }).sum();
        let betti: i64 = f2_betti(&x).iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        assert_eq!(chi, betti, "{name}");
    }
    assert_eq!(fixtures::rp6().f_vector(), [6, 15, 10]);
}

#[test]
fn duality_ranks_match_elimination() {
    // closed pseudomanifolds: H^l(X; h_n) ≅ H_{n-l}(X)
    for x in [fixtures::c3(), fixtures::t4(), fixtures::rp6(), fixtures::hex()] {
        let n = x.dim() as usize;
        let betti = f2_betti(&x);
        let r = verify_duality(&x, &Subcomplex::whole(&x), Item::I1ai, Ring::PrimeField(2)).unwrap();
        assert!(r.iso);
        let want: Vec<usize> = (0..=n).map(|l| betti[n - l]).collect();
        assert_eq!(r.ranks(), want);
    }
}

#[test]
fn relative_duality_ranks_match_elimination() {
    // 2bii with L = ∅: H^l(X) ≅ H_{n-l}(X; h^n) and H^l(X) has the Betti numbers of X over a field
    let x = fixtures::t4();
    let r = verify_duality(&x, &Subcomplex::empty(), Item::I2bii, Ring::PrimeField(2)).unwrap();
    assert_eq!(r.ranks(), f2_betti(&x));
}
