//! Sections of `h_n`, degree-zero cosheaf homology as their dual, and
//! semistability of restriction systems over finite filtrations.

use indexmap::IndexSet;
use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{is_invertible, smith_normal_form, Matrix, Ring, Scalar};
use crate::chain::Chain;
use crate::complex::{Region, SimplicialComplex, Subcomplex};
use crate::local::{evaluate, HCosheaf, HSheaf};
use crate::mv::{hypothesis_witnesses, Item};
use crate::report::{matrix_rows, stalk_labels, Group};
use crate::sheaf::{cosheaf_chain_complex, sections, StalkGen, Variant};
use crate::{Error, Result};

/// A basis of the column span of `m` over a PID.
pub fn image_basis(m: &Matrix, ring: Ring) -> Matrix {
    let s = smith_normal_form(m, ring);
    let cols: Vec<Vec<Scalar>> = s
        .diagonal
        .iter()
        .enumerate()
        .map(|(i, d)| s.u_inv.column(i).iter().map(|x| ring.mul(x, d)).collect())
        .collect();
    Matrix::from_columns(m.rows(), &cols)
}

/// A basis of the kernel of `m`.
pub fn kernel_basis(m: &Matrix, ring: Ring) -> Matrix {
    let s = smith_normal_form(m, ring);
    s.v.col_block(s.rank()..m.cols())
}

/// Some `x` with `m x = b`.
pub fn solve(m: &Matrix, b: &[Scalar], ring: Ring) -> Option<Vec<Scalar>> {
    let s = smith_normal_form(m, ring);
    let y = s.u.apply(b, ring);
    let mut z = vec![ring.zero(); m.cols()];
    for (i, yi) in y.iter().enumerate() {
        match s.diagonal.get(i) {
            Some(d) => {
                let (q, r) = ring.div_rem(yi, d);
                if !r.is_zero() {
                    return None;
                }
                z[i] = q;
            }
            None if !yi.is_zero() => return None,
            None => {}
        }
    }
    Some(s.v.apply(&z, ring))
}

/// Whether the columns of `a` lie in the span of the columns of `b`.
pub fn spans(b: &Matrix, a: &Matrix, ring: Ring) -> bool {
    (0..a.cols()).all(|j| solve(b, &a.column(j), ring).is_some())
}

/// `Γ_0 ← Γ_1 ← ⋯ ← Γ_{N−1}`: `maps[i]` is `r_i: Γ_{i+1} → Γ_i`.
#[derive(Clone, Debug)]
pub struct RestrictionSystem {
    ring: Ring,
    ranks: Vec<usize>,
    maps: Vec<Matrix>,
}

impl RestrictionSystem {
    pub fn new(ring: Ring, ranks: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if ranks.is_empty() || maps.len() + 1 != ranks.len() {
            return Err(Error::Shape("a system of N modules needs N − 1 maps".into()));
        }
        for (i, m) in maps.iter().enumerate() {
            if m.rows() != ranks[i] || m.cols() != ranks[i + 1] {
                return Err(Error::Shape(format!("map {i} is {}×{}, expected {}×{}", m.rows(), m.cols(), ranks[i], ranks[i + 1])));
            }
        }
        Ok(RestrictionSystem { ring, ranks, maps: maps.iter().map(|m| m.reduced(ring)).collect() })
    }

    /// `R ← R ← ⋯` with identity maps.
    pub fn constant(ring: Ring, len: usize) -> Self {
        Self::new(ring, vec![1; len], vec![Matrix::identity(1); len.saturating_sub(1)]).expect("well shaped")
    }

    /// `R ←×c− R ←×c− ⋯`.
    pub fn multiplication(ring: Ring, c: i64, len: usize) -> Self {
        Self::new(ring, vec![1; len], vec![Matrix::from_ints(&[&[c]]); len.saturating_sub(1)]).expect("well shaped")
    }

    /// `Γ(h_n|_{K_i})` along a filtration `K_0 ⊆ K_1 ⊆ ⋯`, with vertex-value
    /// bases of sections.
    pub fn of_sections(x: &SimplicialComplex, hs: &HSheaf, filtration: &[Subcomplex], ring: Ring) -> Result<(Self, Vec<SectionBasis>)> {
        check_filtration(filtration)?;
        let bases: Vec<SectionBasis> = filtration.iter().map(|k| SectionBasis::new(x, hs, k)).collect::<Result<_>>()?;
        let maps = bases
            .windows(2)
            .map(|w| {
                let cols: Vec<Vec<Scalar>> = (0..w[1].rank())
                    .map(|j| w[0].coordinates(&w[1].section(j), ring).expect("restriction of a section is a section"))
                    .collect();
                Matrix::from_columns(w[0].rank(), &cols)
            })
            .collect();
        Ok((Self::new(ring, bases.iter().map(SectionBasis::rank).collect(), maps)?, bases))
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// `r_i^j: Γ_j → Γ_i` for `i ≤ j`.
    pub fn compose(&self, i: usize, j: usize) -> Matrix {
        (i..j).fold(Matrix::identity(self.ranks[i]), |acc, t| acc.mul(&self.maps[t], self.ring))
    }
}

fn check_filtration(filtration: &[Subcomplex]) -> Result<()> {
    if filtration.is_empty() {
        return Err(Error::Usage("the filtration has no stages".into()));
    }
    if let Some(i) = filtration.windows(2).position(|w| !w[0].is_subset_of(&w[1])) {
        return Err(Error::Usage(format!("stage {i} is not contained in stage {}", i + 1)));
    }
    Ok(())
}

/// Vertex values of a basis of `Γ(h_n|_K)`.
#[derive(Clone, Debug)]
pub struct SectionBasis {
    gens: IndexSet<StalkGen>,
    basis: Matrix,
}

impl SectionBasis {
    pub fn new(x: &SimplicialComplex, hs: &HSheaf, k: &Subcomplex) -> Result<Self> {
        let s = sections(x, hs.sheaf(), k)?;
        let gens: IndexSet<StalkGen> = k
            .simplices(x, 0)
            .flat_map(|v| (0..hs.stalk(v).rank()).map(move |a| (v.clone(), a)))
            .collect();
        let cols: Vec<Vec<Scalar>> = s.basis.iter().map(|c| c.to_vector(&gens)).collect();
        Ok(SectionBasis { basis: Matrix::from_columns(gens.len(), &cols), gens })
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn section(&self, j: usize) -> Chain<StalkGen> {
        Chain::from_vector(&self.gens, &self.basis.column(j))
    }

    /// Coordinates of the restriction of a section to this stage.
    pub fn coordinates(&self, s: &Chain<StalkGen>, ring: Ring) -> Option<Vec<Scalar>> {
        solve(&self.basis, &s.project(&self.gens), ring)
    }

    /// `v▹α^* ↦ (s ↦ s^v_α)` on a stalk generator of `h^n` at a vertex.
    pub fn functional(&self, hs: &HSheaf, hc: &HCosheaf, g: &StalkGen) -> Vec<Scalar> {
        let phi = hc.lift(&Chain::unit(g.clone()));
        (0..self.rank())
            .map(|j| {
                let s = self.section(j);
                let value = hs.expand(&s.filtered(|(v, _)| *v == g.0));
                evaluate(&phi, &value)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageReport {
    pub stage: usize,
    /// Least `j` with `im r_i^j = im r_i^{N−1}`.
    pub stable_from: usize,
    pub stabilized: bool,
    pub image_rank: usize,
    pub image_basis: Vec<Vec<String>>,
    /// `Γ_k = I ⊕ ker r_i^k` for every `k ≥ stable_from`, checked on matrices.
    pub splits: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SemistabilityReport {
    pub ring: Ring,
    pub ranks: Vec<usize>,
    /// Every stage but the last stabilizes before the end of the system.
    pub semistable: bool,
    pub stages: Vec<StageReport>,
}

/// Whether the images `Γ_k → Γ_i` settle before the truncation ends, with
/// the splitting `Γ_k ≅ I ⊕ Z_k` checked where they do.
pub fn semistability_check(system: &RestrictionSystem) -> SemistabilityReport {
    let ring = system.ring;
    let last = system.len() - 1;
    let stages: Vec<StageReport> = (0..last)
        .map(|i| {
            let top = system.compose(i, last);
            let stable_from = (i..=last)
                .find(|&j| spans(&top, &system.compose(i, j), ring))
                .unwrap_or(last);
            let image = image_basis(&top, ring);
            let splits = (stable_from..=last).all(|k| splits_off(&system.compose(i, k), &image, ring));
            StageReport {
                stage: i,
                stable_from,
                stabilized: stable_from < last,
                image_rank: image.cols(),
                image_basis: matrix_rows(&image.transpose()),
                splits,
            }
        })
        .collect();
    SemistabilityReport {
        ring,
        ranks: system.ranks.clone(),
        semistable: stages.iter().all(|s| s.stabilized),
        stages,
    }
}

/// Lifts of a basis of `I = im r` together with a basis of `ker r` form a basis.
fn splits_off(r: &Matrix, image: &Matrix, ring: Ring) -> bool {
    let lifts: Option<Vec<Vec<Scalar>>> = (0..image.cols()).map(|j| solve(r, &image.column(j), ring)).collect();
    let Some(lifts) = lifts else { return false };
    let p = Matrix::from_columns(r.cols(), &lifts);
    if r.mul(&p, ring) != image.reduced(ring) {
        return false;
    }
    let basis = p.hstack(&kernel_basis(r, ring));
    basis.rows() == basis.cols() && is_invertible(&basis, ring)
}

/// `H_0(L; h^n|_L) → Hom(Γ(h_n|_L), R)` on homology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H0Report {
    pub ring: Ring,
    pub n: i32,
    pub subcomplex: Vec<String>,
    pub sections_rank: usize,
    pub h0: Group,
    pub matrix: Vec<Vec<String>>,
    /// Boundaries pair to zero with every section.
    pub well_defined: bool,
    pub iso: bool,
}

fn require_cm(x: &SimplicialComplex, l: &Subcomplex, ring: Ring) -> Result<()> {
    if let Some(w) = hypothesis_witnesses(x, l, Item::I1ai, ring)?.first() {
        return Err(Error::Hypothesis(format!(
            "X is not locally CM at L: H_{} at {} is nonzero",
            w.degree,
            w.simplex.as_deref().unwrap_or("?")
        )));
    }
    Ok(())
}

fn dual_map(x: &SimplicialComplex, l: &Subcomplex, hs: &HSheaf, hc: &HCosheaf, basis: &SectionBasis, ring: Ring) -> Result<(H0Report, Matrix)> {
    let c = cosheaf_chain_complex(x, hc.cosheaf(), &Region::Sub(l.clone()), Variant::LocallyFinite)?;
    let gens: Vec<StalkGen> = c.basis.at(0).iter().cloned().collect();
    let cols: Vec<Vec<Scalar>> = gens.iter().map(|g| basis.functional(hs, hc, g)).collect();
    let pairing = Matrix::from_columns(basis.rank(), &cols);
    let well_defined = pairing.mul(&c.complex.differential(1), ring).reduced(ring).is_zero();
    let h = c.complex.homology(0);
    let images: Vec<Vec<Scalar>> = h.generators().iter().map(|z| pairing.apply(z, ring)).collect();
    let m = Matrix::from_columns(basis.rank(), &images);
    let iso = well_defined && h.torsion.is_empty() && m.rows() == m.cols() && is_invertible(&m, ring);
    let labels = stalk_labels(x, &c.basis, 0, false);
    Ok((
        H0Report {
            ring,
            n: hs.degree(),
            subcomplex: l.labels(x),
            sections_rank: basis.rank(),
            h0: Group::new(&h, &labels),
            matrix: matrix_rows(&m),
            well_defined,
            iso,
        },
        pairing,
    ))
}

/// Builds both sides of `H^lf_0(L; h^n|_L) ≅ Hom(Γ_c(h_n|_L), R)` with
/// `n = dim X` and checks the generator formula induces an isomorphism.
pub fn lf_h0_check(x: &SimplicialComplex, l: &Subcomplex, ring: Ring) -> Result<H0Report> {
    require_cm(x, l, ring)?;
    let n = x.dim() as i32;
    let (hs, hc) = (HSheaf::build(x, n, ring)?, HCosheaf::build(x, n, ring)?);
    let basis = SectionBasis::new(x, &hs, l)?;
    Ok(dual_map(x, l, &hs, &hc, &basis, ring)?.0)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColimitReport {
    pub ring: Ring,
    pub stages: Vec<Vec<String>>,
    pub semistability: SemistabilityReport,
    /// Rank of `colim_i Hom(Γ(h_n|_{K_i}), R)`, the dual of the last stage.
    pub colimit_rank: usize,
    pub h0: H0Report,
    /// The generator formula on `K_i` followed by `Γ_i^∨ → colim` agrees
    /// with the formula on `L` for every stage.
    pub natural: bool,
    /// On a finite `L` every homomorphism is compactly determined.
    pub compactly_determined_is_full_dual: bool,
    pub iso: bool,
}

/// `H_0(L; h^n|_L) ≅ colim_i Hom(Γ(h_n|_{K_i}), R)` along a filtration ending at `L`.
pub fn compactly_determined_dual(x: &SimplicialComplex, filtration: &[Subcomplex], ring: Ring) -> Result<ColimitReport> {
    check_filtration(filtration)?;
    let l = filtration.last().expect("nonempty").clone();
    require_cm(x, &l, ring)?;
    let n = x.dim() as i32;
    let (hs, hc) = (HSheaf::build(x, n, ring)?, HCosheaf::build(x, n, ring)?);
    let (system, bases) = RestrictionSystem::of_sections(x, &hs, filtration, ring)?;
    let last = system.len() - 1;
    let (h0, _) = dual_map(x, &l, &hs, &hc, &bases[last], ring)?;
    let natural = filtration.iter().enumerate().all(|(i, k)| {
        let into_colimit = system.compose(i, last).transpose();
        k.simplices(x, 0).all(|v| {
            (0..hc.stalk(v).rank()).all(|a| {
                let g: StalkGen = (v.clone(), a);
                into_colimit.apply(&bases[i].functional(&hs, &hc, &g), ring) == bases[last].functional(&hs, &hc, &g)
            })
        })
    });
    let semistability = semistability_check(&system);
    Ok(ColimitReport {
        ring,
        stages: filtration.iter().map(|k| k.labels(x)).collect(),
        colimit_rank: bases[last].rank(),
        iso: h0.iso && natural,
        h0,
        natural,
        semistability,
        compactly_determined_is_full_dual: true,
    })
}

#[cfg(test)]
mod tests;
