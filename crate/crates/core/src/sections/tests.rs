use super::*;
use crate::algebra::int;
use crate::fixtures;

fn sub(x: &SimplicialComplex, ids: &[&str]) -> Subcomplex {
    Subcomplex::from_labels(x, ids).unwrap()
}

#[test]
fn solving_over_the_integers() {
    let m = Matrix::from_ints(&[&[2, 0], &[0, 3]]);
    assert_eq!(solve(&m, &[int(4), int(9)], Ring::Integers), Some(vec![int(2), int(3)]));
    assert_eq!(solve(&m, &[int(1), int(0)], Ring::Integers), None);
    assert!(solve(&m, &[int(1), int(0)], Ring::Rationals).is_some());
    assert_eq!(image_basis(&Matrix::from_ints(&[&[2, 4]]), Ring::Integers).cols(), 1);
    assert_eq!(kernel_basis(&Matrix::from_ints(&[&[2, 4]]), Ring::Integers).cols(), 1);
}

#[test]
fn h0_of_the_triangle_boundary() {
    let x = fixtures::c3();
    let r = lf_h0_check(&x, &Subcomplex::whole(&x), Ring::Integers).unwrap();
    assert_eq!(r.sections_rank, 1);
    assert_eq!(r.h0.rank, 1);
    assert!(r.well_defined && r.iso);
}

#[test]
fn h0_of_the_sphere_and_a_triangle_in_it() {
    let x = fixtures::t4();
    let r = lf_h0_check(&x, &Subcomplex::whole(&x), Ring::Integers).unwrap();
    assert_eq!((r.sections_rank, r.h0.rank), (1, 1));
    assert!(r.iso);
    let star = lf_h0_check(&x, &sub(&x, &["0", "1", "2"]), Ring::Integers).unwrap();
    assert_eq!((star.sections_rank, star.h0.rank), (1, 1));
    assert!(star.iso);
}

#[test]
fn h0_needs_cohen_macaulay() {
    let x = fixtures::bowtie();
    assert!(matches!(lf_h0_check(&x, &Subcomplex::whole(&x), Ring::Integers), Err(Error::Hypothesis(_))));
    assert!(lf_h0_check(&x, &sub(&x, &["1", "2"]), Ring::Integers).unwrap().iso);
}

#[test]
fn constant_system_is_semistable() {
    let r = semistability_check(&RestrictionSystem::constant(Ring::Integers, 4));
    assert!(r.semistable);
    assert!(r.stages.iter().all(|s| s.image_rank == 1 && s.splits && s.stable_from == s.stage));
}

#[test]
fn doubling_never_settles() {
    let r = semistability_check(&RestrictionSystem::multiplication(Ring::Integers, 2, 5));
    assert!(!r.semistable);
    assert!(r.stages.iter().all(|s| !s.stabilized));
    assert_eq!(r.stages[0].image_basis, vec![vec!["16".to_string()]]);
    let q = semistability_check(&RestrictionSystem::multiplication(Ring::Rationals, 2, 5));
    assert!(q.semistable);
}

#[test]
fn zero_maps_settle_after_one_step() {
    let sys = RestrictionSystem::new(Ring::Integers, vec![1, 1, 1], vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1)]).unwrap();
    let r = semistability_check(&sys);
    assert!(r.stages[0].stabilized);
    assert_eq!((r.stages[0].stable_from, r.stages[0].image_rank), (1, 0));
    assert!(r.stages[0].splits);
    assert!(!r.stages[1].stabilized);
    assert!(!r.semistable);
    assert!(RestrictionSystem::new(Ring::Integers, vec![1, 2], vec![Matrix::zeros(1, 1)]).is_err());
}

#[test]
fn arcs_of_the_triangle_boundary() {
    let x = fixtures::c3();
    let filtration = [sub(&x, &["0"]), sub(&x, &["0", "1"]), Subcomplex::whole(&x)];
    let hs = HSheaf::build(&x, 1, Ring::Integers).unwrap();
    let (sys, _) = RestrictionSystem::of_sections(&x, &hs, &filtration, Ring::Integers).unwrap();
    assert_eq!(sys.ranks(), &[1, 1, 1]);
    assert!(semistability_check(&sys).semistable);
    let r = compactly_determined_dual(&x, &filtration, Ring::Integers).unwrap();
    assert_eq!(r.colimit_rank, 1);
    assert_eq!(r.h0.h0.rank, 1);
    assert!(r.iso && r.natural);
}

#[test]
fn two_disjoint_edges() {
    let x = fixtures::hex();
    let l = sub(&x, &["0", "1", "3", "4"]);
    let r = compactly_determined_dual(&x, &[sub(&x, &["0", "1"]), l], Ring::Integers).unwrap();
    assert_eq!(r.colimit_rank, 2);
    assert_eq!(r.h0.h0.rank, 2);
    assert!(r.iso);
    assert!(r.semistability.semistable);
}

#[test]
fn one_stage_filtration() {
    let x = fixtures::t4();
    let r = compactly_determined_dual(&x, &[Subcomplex::whole(&x)], Ring::Integers).unwrap();
    assert!(r.iso);
    assert_eq!(r.colimit_rank, 1);
    assert!(r.semistability.stages.is_empty() && r.semistability.semistable);
    assert!(compactly_determined_dual(&x, &[Subcomplex::whole(&x), sub(&x, &["0"])], Ring::Integers).is_err());
}
