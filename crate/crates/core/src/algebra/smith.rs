//! Smith normal form over ℤ, ℚ and 𝔽_p with both transformation matrices
//! and their inverses.

use num_bigint::BigInt;
use num_traits::Zero;

use super::matrix::Matrix;
use super::ring::{Ring, Scalar};

/// `u · m · v = d` where `d` carries `diagonal` on its leading diagonal.
#[derive(Clone, Debug)]
pub struct Smith {
    pub u: Matrix,
    pub u_inv: Matrix,
    pub v: Matrix,
    pub v_inv: Matrix,
    /// The nonzero invariant factors, each dividing the next.
    pub diagonal: Vec<Scalar>,
    rows: usize,
    cols: usize,
}

impl Smith {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    pub fn d(&self) -> Matrix {
        let mut d = Matrix::zeros(self.rows, self.cols);
        for (i, x) in self.diagonal.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }
}

struct Work {
    ring: Ring,
    a: Vec<Vec<Scalar>>,
    u: Vec<Vec<Scalar>>,
    u_inv: Vec<Vec<Scalar>>,
    v: Vec<Vec<Scalar>>,
    v_inv: Vec<Vec<Scalar>>,
}

fn dense_identity(n: usize) -> Vec<Vec<Scalar>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { super::int(1) } else { Scalar::zero() })
                .collect()
        })
        .collect()
}

fn add_row(m: &mut [Vec<Scalar>], dst: usize, src: usize, c: &Scalar, ring: Ring) {
    let src_row = m[src].clone();
    for (x, s) in m[dst].iter_mut().zip(src_row.iter()) {
        if !s.is_zero() {
            *x = ring.add(x, &ring.mul(c, s));
        }
    }
}

fn add_col(m: &mut [Vec<Scalar>], dst: usize, src: usize, c: &Scalar, ring: Ring) {
    for row in m.iter_mut() {
        if !row[src].is_zero() {
            let t = ring.mul(c, &row[src]);
            row[dst] = ring.add(&row[dst], &t);
        }
    }
}

fn swap_cols(m: &mut [Vec<Scalar>], i: usize, j: usize) {
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

impl Work {
    /// row `dst` += c · row `src`
    fn row_add(&mut self, dst: usize, src: usize, c: &Scalar) {
        let r = self.ring;
        add_row(&mut self.a, dst, src, c, r);
        add_row(&mut self.u, dst, src, c, r);
        add_col(&mut self.u_inv, src, dst, &r.neg(c), r);
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.u.swap(i, j);
            swap_cols(&mut self.u_inv, i, j);
        }
    }

    fn row_scale(&mut self, i: usize, unit: &Scalar) {
        let r = self.ring;
        let inv = r.inverse(unit).expect("scaling by a unit");
        for x in self.a[i].iter_mut().chain(self.u[i].iter_mut()) {
            *x = r.mul(x, unit);
        }
        for row in self.u_inv.iter_mut() {
            row[i] = r.mul(&row[i], &inv);
        }
    }

    /// col `dst` += c · col `src`
    fn col_add(&mut self, dst: usize, src: usize, c: &Scalar) {
        let r = self.ring;
        add_col(&mut self.a, dst, src, c, r);
        add_col(&mut self.v, dst, src, c, r);
        add_row(&mut self.v_inv, src, dst, &r.neg(c), r);
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i != j {
            swap_cols(&mut self.a, i, j);
            swap_cols(&mut self.v, i, j);
            self.v_inv.swap(i, j);
        }
    }

    fn smallest_in(&self, cells: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), BigInt)> = None;
        for (i, j) in cells {
            let x = &self.a[i][j];
            if x.is_zero() {
                continue;
            }
            let s = self.ring.size(x);
            if best.as_ref().is_none_or(|(_, b)| s < *b) {
                best = Some(((i, j), s));
            }
        }
        best.map(|(c, _)| c)
    }
}

/// Square with a unit determinant.
pub fn is_invertible(m: &Matrix, ring: Ring) -> bool {
    if m.rows() != m.cols() {
        return false;
    }
    let s = smith_normal_form(m, ring);
    s.rank() == m.rows() && s.diagonal.iter().all(|d| ring.is_unit(d))
}

pub fn smith_normal_form(m: &Matrix, ring: Ring) -> Smith {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        ring,
        a: m.reduced(ring).to_dense(),
        u: dense_identity(rows),
        u_inv: dense_identity(rows),
        v: dense_identity(cols),
        v_inv: dense_identity(cols),
    };
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = w.smallest_in((t..rows).flat_map(|i| (t..cols).map(move |j| (i, j))))
        else {
            break;
        };
        w.row_swap(t, pi);
        w.col_swap(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !w.a[i][t].is_zero() {
                    let (q, r) = ring.div_rem(&w.a[i][t], &w.a[t][t]);
                    w.row_add(i, t, &ring.neg(&q));
                    clean &= r.is_zero();
                }
            }
            for j in t + 1..cols {
                if !w.a[t][j].is_zero() {
                    let (q, r) = ring.div_rem(&w.a[t][j], &w.a[t][t]);
                    w.col_add(j, t, &ring.neg(&q));
                    clean &= r.is_zero();
                }
            }
            if !clean {
                let cells = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = w.smallest_in(cells).expect("pivot line is nonzero");
                w.row_swap(t, pi);
                w.col_swap(t, pj);
                continue;
            }
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !ring.divides(&w.a[t][t], &w.a[i][j]));
            match offender {
                Some((i, _)) => w.row_add(t, i, &ring.one()),
                None => break,
            }
        }
        let unit = ring.normalizing_unit(&w.a[t][t]);
        w.row_scale(t, &unit);
        diagonal.push(w.a[t][t].clone());
    }
    Smith {
        u: Matrix::from_dense(rows, rows, &w.u),
        u_inv: Matrix::from_dense(rows, rows, &w.u_inv),
        v: Matrix::from_dense(cols, cols, &w.v),
        v_inv: Matrix::from_dense(cols, cols, &w.v_inv),
        diagonal,
        rows,
        cols,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn check(m: &Matrix, ring: Ring) -> Smith {
        let s = smith_normal_form(m, ring);
        assert_eq!(s.u.mul(m, ring).mul(&s.v, ring), s.d());
        assert_eq!(s.u.mul(&s.u_inv, ring), Matrix::identity(m.rows()));
        assert_eq!(s.v.mul(&s.v_inv, ring), Matrix::identity(m.cols()));
        for w in s.diagonal.windows(2) {
            assert!(ring.divides(&w[0], &w[1]));
        }
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&Matrix::from_ints(&[&[2, 0], &[0, 3]]), Ring::Integers);
        assert_eq!(s.diagonal, vec![int(1), int(6)]);
    }

    #[test]
    fn zero_and_identity() {
        let s = check(&Matrix::zeros(2, 3), Ring::Integers);
        assert_eq!(s.rank(), 0);
        assert_eq!(s.u, Matrix::identity(2));
        assert_eq!(s.v, Matrix::identity(3));
        let s = check(&Matrix::from_ints(&[&[1]]), Ring::Integers);
        assert_eq!(s.diagonal, vec![int(1)]);
    }

    #[test]
    fn awkward_integer_matrix() {
        let m = Matrix::from_ints(&[&[6, 4, 10], &[-3, 8, 7], &[9, 0, 12], &[4, 4, 4]]);
        let s = check(&m, Ring::Integers);
        assert_eq!(s.rank(), 3);
        check(&m, Ring::Rationals);
        check(&m, Ring::PrimeField(3));
    }
}
