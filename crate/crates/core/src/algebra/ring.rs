use alloc::vec::Vec;
use core::fmt;

use super::{Field, FieldElem, Matrix};
use crate::{Error, Result};

/// A commutative ring given as a runtime context.
///
/// Elements are plain data; every operation goes through the ring value,
/// which carries the modulus, characteristic or truncation orders.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Inverse, or `None` when `a` is not a unit.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn write_elem(&self, a: &Self::Elem, f: &mut fmt::Formatter<'_>) -> fmt::Result;

    fn is_field(&self) -> bool {
        false
    }

    /// Smallest `N` with `m^N = 0` for the maximal ideal `m`; 1 for fields.
    fn nilpotency_index(&self) -> usize {
        1
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inv(a).is_some()
    }

    fn pow(&self, a: &Self::Elem, mut n: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            n >>= 1;
            if n > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// `a^n` for any integer `n`; negative powers need a unit.
    fn pow_signed(&self, a: &Self::Elem, n: i64) -> Result<Self::Elem> {
        if n >= 0 {
            Ok(self.pow(a, n as u64))
        } else {
            let inv = self.inv(a).ok_or(Error::NotAUnit)?;
            Ok(self.pow(&inv, n.unsigned_abs()))
        }
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        if self.is_zero(b) {
            return Err(Error::DivisionByZero);
        }
        let inv = self.inv(b).ok_or(Error::NotAUnit)?;
        Ok(self.mul(a, &inv))
    }

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items.into_iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn display<'a>(&'a self, a: &'a Self::Elem) -> Value<'a, Self> {
        Value { ring: self, elem: a }
    }
}

/// Borrowed element together with its ring, for printing.
pub struct Value<'a, R: Ring> {
    pub ring: &'a R,
    pub elem: &'a R::Elem,
}

impl<R: Ring> fmt::Display for Value<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ring.write_elem(self.elem, f)
    }
}

impl<R: Ring> fmt::Debug for Value<'_, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ring.write_elem(self.elem, f)
    }
}

/// A ring that is a finite-dimensional algebra over a base field.
///
/// Norms and traces are the determinant and trace of the multiplication map,
/// as a linear map over the base field.
pub trait FiniteAlgebra: Ring {
    fn base_field(&self) -> Field;
    fn dimension(&self) -> usize;
    fn coordinates(&self, a: &Self::Elem) -> Vec<FieldElem>;
    #[allow(clippy::wrong_self_convention)]
    fn from_coordinates(&self, coords: &[FieldElem]) -> Self::Elem;
    /// The image of a base-field scalar.
    fn embed(&self, c: &FieldElem) -> Self::Elem;

    fn basis_element(&self, i: usize) -> Self::Elem {
        let k = self.base_field();
        let coords: Vec<FieldElem> = (0..self.dimension())
            .map(|j| if i == j { k.one() } else { k.zero() })
            .collect();
        self.from_coordinates(&coords)
    }

    /// Matrix of `x -> a*x` in the coordinate basis; column `j` holds `a * e_j`.
    fn multiplication_matrix(&self, a: &Self::Elem) -> Matrix<Field> {
        let k = self.base_field();
        let n = self.dimension();
        let mut m = Matrix::zeros(&k, n, n);
        for j in 0..n {
            let col = self.coordinates(&self.mul(a, &self.basis_element(j)));
            for (i, c) in col.into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    fn norm(&self, a: &Self::Elem) -> FieldElem {
        self.multiplication_matrix(a).det()
    }

    fn trace(&self, a: &Self::Elem) -> FieldElem {
        self.multiplication_matrix(a).trace()
    }

    /// Norm down to `over`, composing through the base field when `over`
    /// sits below it.
    fn norm_over(&self, a: &Self::Elem, over: &Field) -> Result<FieldElem> {
        let base = self.base_field();
        let n = self.norm(a);
        if base == *over {
            Ok(n)
        } else {
            base.norm_over(&n, over)
        }
    }

    fn trace_over(&self, a: &Self::Elem, over: &Field) -> Result<FieldElem> {
        let base = self.base_field();
        let t = self.trace(a);
        if base == *over {
            Ok(t)
        } else {
            base.trace_over(&t, over)
        }
    }

    /// Dimension over `over`.
    fn degree_over(&self, over: &Field) -> Result<usize> {
        let base = self.base_field();
        if base == *over {
            Ok(self.dimension())
        } else {
            Ok(self.dimension() * base.degree_over(over)?)
        }
    }
}
