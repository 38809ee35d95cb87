use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::ring::{Ring, Scalar};

/// Row-sparse matrix with exact entries. Zeros are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, Scalar>>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![BTreeMap::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::from_integer(1.into()));
        }
        m
    }

    pub fn from_dense(rows: usize, cols: usize, dense: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        for (i, row) in dense.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let dense: Vec<Vec<Scalar>> = rows
            .iter()
            .map(|row| row.iter().map(|&v| super::int(v)).collect())
            .collect();
        Matrix::from_dense(r, c, &dense)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i].get(&j).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: &Scalar) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn row_entries(&self, i: usize) -> impl Iterator<Item = (usize, &Scalar)> {
        self.data[i].iter().map(|(j, v)| (*j, v))
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|r| r.is_empty())
    }

    pub fn reduced(&self, ring: Ring) -> Matrix {
        let mut m = Matrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.entries() {
            m.set(i, j, ring.reduce(v));
        }
        m
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            t.set(j, i, v.clone());
        }
        t
    }

    pub fn mul(&self, other: &Matrix, ring: Ring) -> Matrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (k, a) in &self.data[i] {
                for (j, b) in &other.data[*k] {
                    *acc.entry(*j).or_insert_with(Scalar::zero) += a * b;
                }
            }
            for (j, v) in acc {
                out.set(i, j, ring.reduce(&v));
            }
        }
        out
    }

    pub fn sub(&self, other: &Matrix, ring: Ring) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (i, j, v) in other.entries() {
            let cur = out.get(i, j);
            out.set(i, j, ring.sub(&cur, v));
        }
        out
    }

    pub fn scaled(&self, c: &Scalar, ring: Ring) -> Matrix {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.entries() {
            out.set(i, j, ring.mul(v, c));
        }
        out
    }

    pub fn apply(&self, v: &[Scalar], ring: Ring) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.data
            .iter()
            .map(|row| {
                let s = row.iter().fold(Scalar::zero(), |acc, (j, a)| acc + a * &v[*j]);
                ring.reduce(&s)
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Rows `range` as a new matrix.
    pub fn row_block(&self, range: std::ops::Range<usize>) -> Matrix {
        let mut m = Matrix::zeros(range.len(), self.cols);
        for (new, i) in range.enumerate() {
            m.data[new] = self.data[i].clone();
        }
        m
    }

    /// Columns `range` as a new matrix.
    pub fn col_block(&self, range: std::ops::Range<usize>) -> Matrix {
        let mut m = Matrix::zeros(self.rows, range.len());
        for (i, j, v) in self.entries() {
            if range.contains(&j) {
                m.set(i, j - range.start, v.clone());
            }
        }
        m
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        for (i, j, v) in self.entries() {
            m.set(i, j, v.clone());
        }
        for (i, j, v) in other.entries() {
            m.set(i, self.cols + j, v.clone());
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn product_and_transpose() {
        let a = Matrix::from_ints(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_ints(&[&[1, -2], &[0, 1]]);
        assert_eq!(a.mul(&b, Ring::Integers), Matrix::identity(2));
        assert_eq!(a.transpose().get(1, 0), int(2));
    }

    #[test]
    fn zeros_are_not_stored() {
        let mut m = Matrix::zeros(2, 2);
        m.set(0, 0, int(3));
        m.add_to(0, 0, &int(-3));
        assert!(m.is_zero());
    }

    #[test]
    fn reduction_mod_p() {
        let m = Matrix::from_ints(&[&[2, 3]]);
        let r = m.reduced(Ring::PrimeField(2));
        assert!(r.get(0, 0).is_zero());
        assert_eq!(r.get(0, 1), int(1));
    }
}
