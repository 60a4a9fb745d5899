use alloc::vec::Vec;

use crate::algebra::{Field, FieldElem, FiniteAlgebra, Matrix};
use crate::laurent::LaurentSeries;
use crate::{Error, Result};

/// An `n x n` matrix of Laurent series, an element of `gl_n(k'((z)))`.
#[derive(Clone, Debug)]
pub struct LoopAlgebraElement {
    n: usize,
    entries: Vec<LaurentSeries<Field>>,
    pure: Option<(Matrix<Field>, LaurentSeries<Field>)>,
}

impl LoopAlgebraElement {
    pub fn from_entries(n: usize, entries: Vec<LaurentSeries<Field>>) -> Result<Self> {
        if entries.len() != n * n || n == 0 {
            return Err(Error::SizeMismatch);
        }
        Ok(LoopAlgebraElement { n, entries, pure: None })
    }

    /// `S (x) alpha`.
    pub fn pure_tensor(s: &Matrix<Field>, alpha: &LaurentSeries<Field>) -> Result<Self> {
        if !s.is_square() {
            return Err(Error::SizeMismatch);
        }
        let n = s.rows();
        let entries = (0..n * n).map(|i| alpha.scale(s.get(i / n, i % n))).collect();
        Ok(LoopAlgebraElement { n, entries, pure: Some((s.clone(), alpha.clone())) })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &LaurentSeries<Field> {
        &self.entries[i * self.n + j]
    }

    pub fn pure_form(&self) -> Option<&(Matrix<Field>, LaurentSeries<Field>)> {
        self.pure.as_ref()
    }

    fn zip(&self, other: &Self, f: impl Fn(&LaurentSeries<Field>, &LaurentSeries<Field>) -> LaurentSeries<Field>) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch);
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Ok(LoopAlgebraElement { n: self.n, entries, pure: None })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.add(b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.sub(b))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch);
        }
        let n = self.n;
        let k = self.entries[0].ring();
        let entries = (0..n * n)
            .map(|idx| {
                let (i, j) = (idx / n, idx % n);
                (0..n).fold(LaurentSeries::zero(k), |acc, l| acc.add(&self.entry(i, l).mul(other.entry(l, j))))
            })
            .collect();
        Ok(LoopAlgebraElement { n, entries, pure: None })
    }

    /// `[A, B] = AB - BA`.
    pub fn bracket(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn derivative(&self) -> Self {
        LoopAlgebraElement { n: self.n, entries: self.entries.iter().map(|e| e.derivative()).collect(), pure: None }
    }

    pub fn trace(&self) -> LaurentSeries<Field> {
        let k = self.entries[0].ring();
        (0..self.n).fold(LaurentSeries::zero(k), |acc, i| acc.add(self.entry(i, i)))
    }
}

/// `tr_{k'/k} res tr(A dB)`.
pub fn gf_cocycle_local(a: &LoopAlgebraElement, b: &LoopAlgebraElement, base: &Field) -> Result<FieldElem> {
    let t = a.mul(&b.derivative())?.trace();
    let k = t.ring().clone();
    k.trace_over(&t.residue()?, base)
}
