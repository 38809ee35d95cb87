use rayon::prelude::*;
use serde::Serialize;

use super::{local_chains, reduced_homology};
use crate::algebra::{HomologyPresentation, Ring};
use crate::complex::{Simplex, SimplicialComplex, Subcomplex};
use crate::Result;

/// A nonzero group outside the top degree. `simplex` is `None` for reduced
/// homology of the whole complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub simplex: Option<String>,
    pub in_subcomplex: bool,
    pub degree: i32,
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmReport {
    pub n: i32,
    pub locally_cm_at_l: bool,
    pub locally_cm: bool,
    pub cm: bool,
    pub pure: bool,
    pub witnesses: Vec<Witness>,
}

fn witness(simplex: Option<String>, in_subcomplex: bool, h: &HomologyPresentation) -> Witness {
    Witness {
        simplex,
        in_subcomplex,
        degree: h.degree(),
        free_rank: h.free_rank,
        torsion: h.torsion.iter().map(ToString::to_string).collect(),
    }
}

fn local_witnesses(x: &SimplicialComplex, s: &Simplex, l: &Subcomplex, n: i32, ring: Ring) -> Result<Vec<Witness>> {
    let c = local_chains(x, s, ring)?.complex;
    Ok((0..=x.dim() as i32)
        .filter(|&k| k != n)
        .map(|k| c.homology(k))
        .filter(|h| !h.is_zero())
        .map(|h| witness(Some(x.display(s)), l.contains(s), &h))
        .collect())
}

/// Local homology concentrated in degree `n` on `L` and on `X`, and reduced
/// homology concentrated in degree `n`.
pub fn cm_check(x: &SimplicialComplex, l: &Subcomplex, n: i32, ring: Ring) -> Result<CmReport> {
    let simplices: Vec<&Simplex> = x.all_simplices().collect();
    let per: Vec<Vec<Witness>> = simplices
        .par_iter()
        .map(|s| local_witnesses(x, s, l, n, ring))
        .collect::<Result<_>>()?;
    let mut witnesses: Vec<Witness> = per.into_iter().flatten().collect();
    let locally_cm = witnesses.is_empty();
    let locally_cm_at_l = witnesses.iter().all(|w| !w.in_subcomplex);
    let global: Vec<Witness> = reduced_homology(x, ring)?
        .values()
        .filter(|h| h.degree() != n && !h.is_zero())
        .map(|h| witness(None, false, h))
        .collect();
    let cm = locally_cm && global.is_empty();
    witnesses.extend(global);
    let pure = x.is_pure() && x.dim() == n as isize;
    debug_assert!(!locally_cm || pure || x.dim() < 0, "locally CM complexes are pure");
    Ok(CmReport {
        n,
        locally_cm_at_l,
        locally_cm,
        cm,
        pure,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn examples() {
        let z = Ring::Integers;
        let c3 = fixtures::c3();
        let r = cm_check(&c3, &Subcomplex::whole(&c3), 1, z).unwrap();
        assert!(r.cm && r.pure && r.witnesses.is_empty());

        let b = fixtures::bowtie();
        let r = cm_check(&b, &Subcomplex::whole(&b), 2, z).unwrap();
        assert!(!r.locally_cm);
        assert!(r.witnesses.iter().any(|w| w.simplex.as_deref() == Some("[0]") && w.degree == 1));
        let away = Subcomplex::from_labels(&b, &["1", "2"]).unwrap();
        assert!(cm_check(&b, &away, 2, z).unwrap().locally_cm_at_l);

        let rp = fixtures::rp6();
        let r = cm_check(&rp, &Subcomplex::whole(&rp), 2, z).unwrap();
        assert!(r.locally_cm && !r.cm);
        assert!(r.witnesses.iter().any(|w| w.simplex.is_none() && w.degree == 1 && w.torsion == ["2"]));
    }
}
