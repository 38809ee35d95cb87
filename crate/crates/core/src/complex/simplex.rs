use crate::{Error, Result};

/// Vertex ids listed in orientation order. The owning complex fixes the order;
/// a `Simplex` taken from one complex is only meaningful there.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    /// Caller guarantees `ids` are distinct and already in orientation order.
    pub(crate) fn from_ordered(ids: Vec<u32>) -> Self {
        Simplex(ids)
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    /// `σ_j`.
    pub fn vertex(&self, j: usize) -> u32 {
        self.0[j]
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.0.contains(&v)
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.0.contains(v))
    }

    pub fn is_disjoint_from(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| !other.0.contains(v))
    }

    /// `σ_⟨j⟩`: drop the j-th vertex.
    pub fn face(&self, j: usize) -> Simplex {
        let mut v = self.0.clone();
        v.remove(j);
        Simplex(v)
    }

    /// `σ_{≤j}`: vertices `σ_0..σ_j`.
    pub fn front(&self, j: usize) -> Simplex {
        Simplex(self.0[..=j].to_vec())
    }

    /// `σ_{≥j}`: vertices `σ_j..σ_k`.
    pub fn back(&self, j: usize) -> Simplex {
        Simplex(self.0[j..].to_vec())
    }

    /// `(σ_⟨j⟩, σ_{≤j}, σ_{≥j})`.
    pub fn face_parts(&self, j: usize) -> Result<(Simplex, Simplex, Simplex)> {
        if j >= self.0.len() {
            return Err(Error::FaceIndex {
                index: j,
                dim: self.dim(),
            });
        }
        Ok((self.face(j), self.front(j), self.back(j)))
    }

    /// `(j, σ_⟨j⟩)` for every codimension-one face.
    pub fn boundary_faces(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        (0..self.0.len()).map(move |j| (j, self.face(j)))
    }

    /// Every nonempty face, including the simplex itself.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        (1u32..(1 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    /// Position of vertex `v` inside the simplex.
    pub fn index_of(&self, v: u32) -> Option<usize> {
        self.0.iter().position(|&x| x == v)
    }
}

/// `(-1)^j` as an integer.
pub fn sign(j: usize) -> i64 {
    if j.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[u32]) -> Simplex {
        Simplex::from_ordered(v.to_vec())
    }

    #[test]
    fn face_parts_examples() {
        assert_eq!(s(&[0, 1, 2]).face_parts(1).unwrap(), (s(&[0, 2]), s(&[0, 1]), s(&[1, 2])));
        assert_eq!(s(&[5]).face_parts(0).unwrap(), (s(&[]), s(&[5]), s(&[5])));
        assert_eq!(
            s(&[1, 3, 4, 7]).face_parts(2).unwrap(),
            (s(&[1, 3, 7]), s(&[1, 3, 4]), s(&[4, 7]))
        );
        assert!(s(&[1, 2]).face_parts(2).is_err());
    }
}
