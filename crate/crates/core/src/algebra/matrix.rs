use alloc::vec::Vec;
use core::fmt;

use super::Ring;
use crate::{Error, Result};

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    data: Vec<R::Elem>,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix { ring: ring.clone(), rows, cols, data: alloc::vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &R, n: usize) -> Self {
        Self::from_fn(ring, n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn from_fn(ring: &R, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { ring: ring.clone(), rows, cols, data }
    }

    pub fn from_rows(ring: &R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::SizeMismatch);
        }
        Ok(Matrix { ring: ring.clone(), rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.ring.is_zero(x))
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(&self.ring, r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Assembles `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &Self, b: &Self, c: &Self, d: &Self) -> Result<Self> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::SizeMismatch);
        }
        let (top, left) = (a.rows, a.cols);
        Ok(Self::from_fn(&a.ring, a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < top, j < left) {
                (true, true) => a.get(i, j).clone(),
                (true, false) => b.get(i, j - left).clone(),
                (false, true) => c.get(i - top, j).clone(),
                (false, false) => d.get(i - top, j - left).clone(),
            }
        }))
    }

    pub fn map<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix { ring: target.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch);
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.add(a, b)).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::SizeMismatch);
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| self.ring.sub(a, b)).collect();
        Ok(Matrix { data, ..self.clone() })
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let data = self.data.iter().map(|a| self.ring.mul(a, c)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch);
        }
        let r = &self.ring;
        let mut out = Self::zeros(r, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if r.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = r.add(&out.data[idx], &r.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> R::Elem {
        let n = self.rows.min(self.cols);
        self.ring.sum((0..n).map(|i| self.get(i, i)))
    }

    /// Determinant. Gaussian elimination on unit pivots; rings where that
    /// stalls fall back to the division-free Berkowitz recursion.
    pub fn det(&self) -> R::Elem {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let r = &self.ring;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = r.one();
        for col in 0..n {
            let pivot = (col..n).find(|&row| r.is_unit(&m[row * n + col]));
            let Some(row) = pivot else {
                if r.is_field() {
                    return r.zero();
                }
                return self.det_berkowitz();
            };
            if row != col {
                for j in 0..n {
                    m.swap(row * n + j, col * n + j);
                }
                det = r.neg(&det);
            }
            let p = m[col * n + col].clone();
            det = r.mul(&det, &p);
            let inv = r.inv(&p).unwrap();
            for i in col + 1..n {
                let factor = r.mul(&m[i * n + col], &inv);
                if r.is_zero(&factor) {
                    continue;
                }
                for j in col..n {
                    let t = r.mul(&factor, &m[col * n + j]);
                    m[i * n + j] = r.sub(&m[i * n + j], &t);
                }
            }
        }
        det
    }

    /// Coefficients of `det(xI - A)`, highest degree first, without division.
    pub fn charpoly_berkowitz(&self) -> Vec<R::Elem> {
        let r = &self.ring;
        let n = self.rows;
        let mut p = alloc::vec![r.one()];
        for k in 1..=n {
            let a = self.get(k - 1, k - 1);
            let mut q = alloc::vec![r.one(), r.neg(a)];
            // column C = A[0..k-1][k-1], row R = A[k-1][0..k-1]
            let mut v: Vec<R::Elem> = (0..k - 1).map(|i| self.get(i, k - 1).clone()).collect();
            for _ in 0..k - 1 {
                let rc = r.sum(
                    (0..k - 1).map(|j| r.mul(self.get(k - 1, j), &v[j])).collect::<Vec<_>>().iter(),
                );
                q.push(r.neg(&rc));
                v = (0..k - 1)
                    .map(|i| {
                        r.sum((0..k - 1).map(|j| r.mul(self.get(i, j), &v[j])).collect::<Vec<_>>().iter())
                    })
                    .collect();
            }
            let mut next = Vec::with_capacity(k + 1);
            for i in 0..=k {
                let mut acc = r.zero();
                for (j, pj) in p.iter().enumerate().take(i.min(k - 1) + 1) {
                    acc = r.add(&acc, &r.mul(&q[i - j], pj));
                }
                next.push(acc);
            }
            p = next;
        }
        p
    }

    pub fn det_berkowitz(&self) -> R::Elem {
        let p = self.charpoly_berkowitz();
        let c = p.last().unwrap().clone();
        if self.rows.is_multiple_of(2) {
            c
        } else {
            self.ring.neg(&c)
        }
    }

    /// Inverse by Gauss-Jordan on unit pivots; `None` if no unit pivot exists,
    /// which for fields and local rings means the matrix is singular.
    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let r = &self.ring;
        let n = self.rows;
        let mut m = self.data.clone();
        let mut inv = Self::identity(r, n).data;
        for col in 0..n {
            let row = (col..n).find(|&row| r.is_unit(&m[row * n + col]))?;
            if row != col {
                for j in 0..n {
                    m.swap(row * n + j, col * n + j);
                    inv.swap(row * n + j, col * n + j);
                }
            }
            let p_inv = r.inv(&m[col * n + col]).unwrap();
            for j in 0..n {
                m[col * n + j] = r.mul(&m[col * n + j], &p_inv);
                inv[col * n + j] = r.mul(&inv[col * n + j], &p_inv);
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let factor = m[i * n + col].clone();
                if r.is_zero(&factor) {
                    continue;
                }
                for j in 0..n {
                    let t = r.mul(&factor, &m[col * n + j]);
                    m[i * n + j] = r.sub(&m[i * n + j], &t);
                    let t = r.mul(&factor, &inv[col * n + j]);
                    inv[i * n + j] = r.sub(&inv[i * n + j], &t);
                }
            }
        }
        Some(Matrix { ring: r.clone(), rows: n, cols: n, data: inv })
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                self.ring.write_elem(self.get(i, j), f)?;
            }
        }
        f.write_str("]")
    }
}
