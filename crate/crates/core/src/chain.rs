//! Finite formal linear combinations of basis symbols.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::hash::Hash;

use indexmap::IndexSet;
use num_traits::Zero;

use crate::algebra::{int, ChainComplex, ChainMap, Matrix, Ring, Scalar};
use crate::Result;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Chain<T: Ord> {
    terms: BTreeMap<T, Scalar>,
}

impl<T: Ord + Clone> Chain<T> {
    pub fn new() -> Self {
        Chain {
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(t: T) -> Self {
        Self::term(t, int(1))
    }

    pub fn term(t: T, c: Scalar) -> Self {
        let mut ch = Self::new();
        ch.add_term(t, c);
        ch
    }

    pub fn add_term(&mut self, t: T, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_signed(&mut self, t: T, sign: i64) {
        self.add_term(t, int(sign));
    }

    pub fn add_chain(&mut self, other: &Chain<T>, c: &Scalar) {
        for (t, v) in &other.terms {
            self.add_term(t.clone(), v * c);
        }
    }

    pub fn plus(mut self, other: &Chain<T>) -> Self {
        self.add_chain(other, &int(1));
        self
    }

    pub fn minus(mut self, other: &Chain<T>) -> Self {
        self.add_chain(other, &int(-1));
        self
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        let mut out = Self::new();
        out.add_chain(self, c);
        out
    }

    pub fn coefficient(&self, t: &T) -> Scalar {
        self.terms.get(t).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&T, &Scalar)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &T> {
        self.terms.keys()
    }

    /// Linear extension of `f`.
    pub fn map<U: Ord + Clone>(&self, mut f: impl FnMut(&T) -> Chain<U>) -> Chain<U> {
        let mut out = Chain::new();
        for (t, c) in &self.terms {
            out.add_chain(&f(t), c);
        }
        out
    }

    /// Drops the terms failing `keep`.
    pub fn filtered(&self, keep: impl Fn(&T) -> bool) -> Self {
        Chain {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| keep(t))
                .map(|(t, c)| (t.clone(), c.clone()))
                .collect(),
        }
    }

    /// Reduces every coefficient into `ring`.
    pub fn reduced(&self, ring: Ring) -> Self {
        let mut out = Self::new();
        for (t, c) in &self.terms {
            out.add_term(t.clone(), ring.reduce(c));
        }
        out
    }

}

impl<T: Ord + Clone + Hash> Chain<T> {
    /// Coefficient vector against `basis`; panics on a term outside it.
    pub fn to_vector(&self, basis: &IndexSet<T>) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); basis.len()];
        for (t, c) in &self.terms {
            let i = basis.get_index_of(t).expect("term outside the basis");
            v[i] += c;
        }
        v
    }

    /// Like [`Chain::to_vector`] but silently drops terms outside `basis`.
    pub fn project(&self, basis: &IndexSet<T>) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); basis.len()];
        for (t, c) in &self.terms {
            if let Some(i) = basis.get_index_of(t) {
                v[i] += c;
            }
        }
        v
    }

    pub fn from_vector(basis: &IndexSet<T>, v: &[Scalar]) -> Self {
        let mut out = Self::new();
        for (t, c) in basis.iter().zip(v) {
            out.add_term(t.clone(), c.clone());
        }
        out
    }
}

impl<T: Ord + Clone> FromIterator<(T, Scalar)> for Chain<T> {
    fn from_iter<I: IntoIterator<Item = (T, Scalar)>>(iter: I) -> Self {
        let mut out = Chain::new();
        for (t, c) in iter {
            out.add_term(t, c);
        }
        out
    }
}

/// A basis in each degree.
#[derive(Clone, Debug, Default)]
pub struct Graded<T: Hash + Eq> {
    degrees: BTreeMap<i32, IndexSet<T>>,
    empty: IndexSet<T>,
}

impl<T: Hash + Eq + Ord + Clone> Graded<T> {
    pub fn new() -> Self {
        Graded {
            degrees: BTreeMap::new(),
            empty: IndexSet::new(),
        }
    }

    pub fn insert(&mut self, k: i32, t: T) {
        self.degrees.entry(k).or_default().insert(t);
    }

    /// Basis in degree `k` (empty if absent).
    pub fn at(&self, k: i32) -> &IndexSet<T> {
        self.degrees.get(&k).unwrap_or(&self.empty)
    }

    pub fn ranks(&self) -> BTreeMap<i32, usize> {
        self.degrees.iter().map(|(k, b)| (*k, b.len())).collect()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.degrees.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &T)> {
        self.degrees.iter().flat_map(|(k, b)| b.iter().map(move |t| (*k, t)))
    }

    pub fn degree_of(&self, t: &T) -> Option<i32> {
        self.degrees.iter().find(|(_, b)| b.contains(t)).map(|(k, _)| *k)
    }

    pub fn contains(&self, t: &T) -> bool {
        self.degrees.values().any(|b| b.contains(t))
    }

    /// The same bases with every degree `k` moved to `f(k)`.
    pub fn regraded(&self, f: impl Fn(i32) -> i32) -> Self {
        Graded {
            degrees: self.degrees.iter().map(|(k, b)| (f(*k), b.clone())).collect(),
            empty: IndexSet::new(),
        }
    }

    /// Splits a mixed-degree chain into per-degree coefficient vectors.
    pub fn vectors(&self, c: &Chain<T>) -> BTreeMap<i32, Vec<Scalar>> {
        let mut out: BTreeMap<i32, Vec<Scalar>> = BTreeMap::new();
        for (t, v) in c.iter() {
            let k = self.degree_of(t).expect("term outside the graded basis");
            let basis = self.at(k);
            let slot = out.entry(k).or_insert_with(|| vec![Scalar::zero(); basis.len()]);
            slot[basis.get_index_of(t).expect("present")] += v;
        }
        out
    }
}

/// How terms outside the target basis are treated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outside {
    /// Such a term is a bug.
    Forbid,
    /// Such a term is zero in a quotient.
    Drop,
}

/// Matrix of `f` from `src` to `tgt`, column per source generator.
pub fn matrix_of<T, U>(
    ring: Ring,
    src: &IndexSet<T>,
    tgt: &IndexSet<U>,
    outside: Outside,
    f: impl Fn(&T) -> Chain<U>,
) -> Matrix
where
    T: Hash + Eq + Ord + Clone,
    U: Hash + Eq + Ord + Clone,
{
    let mut m = Matrix::zeros(tgt.len(), src.len());
    for (j, t) in src.iter().enumerate() {
        for (u, c) in f(t).iter() {
            match tgt.get_index_of(u) {
                Some(i) => m.add_to(i, j, c),
                None => assert!(outside == Outside::Drop, "image term outside the target basis"),
            }
        }
    }
    m.reduced(ring)
}

/// The complex with basis `basis` and differential `d` (lowering degree by one).
pub fn build_complex<T>(ring: Ring, basis: &Graded<T>, outside: Outside, d: impl Fn(&T) -> Chain<T>) -> Result<ChainComplex>
where
    T: Hash + Eq + Ord + Clone,
{
    let diffs = basis
        .degrees()
        .map(|k| (k, matrix_of(ring, basis.at(k), basis.at(k - 1), outside, &d)))
        .collect();
    ChainComplex::new(ring, basis.ranks(), diffs)
}

/// Degree-preserving chain map defined on generators.
pub fn build_map<T, U>(
    src: (&Graded<T>, &ChainComplex),
    tgt: (&Graded<U>, &ChainComplex),
    outside: Outside,
    f: impl Fn(&T) -> Chain<U>,
) -> Result<ChainMap>
where
    T: Hash + Eq + Ord + Clone,
    U: Hash + Eq + Ord + Clone,
{
    let ring = src.1.ring();
    let maps = src
        .0
        .degrees()
        .map(|k| (k, matrix_of(ring, src.0.at(k), tgt.0.at(k), outside, &f)))
        .collect();
    ChainMap::new(src.1, tgt.1, maps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut c = Chain::unit("a");
        c.add_signed("b", 2);
        c.add_signed("a", -1);
        assert_eq!(c.len(), 1);
        assert_eq!(c.coefficient(&"b"), int(2));
    }

    #[test]
    fn linear_extension() {
        let c: Chain<u8> = [(1, int(2)), (2, int(-1))].into_iter().collect();
        let d = c.map(|&t| Chain::unit(t * 10));
        assert_eq!(d.coefficient(&20), int(-1));
    }
}
