use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;

use super::{Field, FieldElem, Ring};
use crate::{Error, Result};

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `x^i` and
/// the last stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<FieldElem>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(field: &Field, c: FieldElem) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn one(field: &Field) -> Self {
        Poly::constant(field, field.one())
    }

    pub fn x(field: &Field) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `x - a`.
    pub fn linear(field: &Field, a: &FieldElem) -> Self {
        Poly::new(field, vec![field.neg(a), field.one()])
    }

    pub fn from_i64(field: &Field, coeffs: &[i64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn from_u64(field: &Field, coeffs: &[u64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.from_int(c as i64)).collect())
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn deg(&self) -> i64 {
        self.coeffs.len() as i64 - 1
    }

    pub fn leading(&self) -> Option<&FieldElem> {
        self.coeffs.last()
    }

    pub fn coeff(&self, field: &Field, i: usize) -> FieldElem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| field.zero())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Coefficients reversed relative to degree `n`: `x^n p(1/x)`.
    pub fn reversed(&self, field: &Field, n: usize) -> Poly {
        let mut c = vec![field.zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[n - i] = a.clone();
        }
        Poly::new(field, c)
    }

    /// Maps each coefficient through `f` into another field.
    pub fn map(&self, target: &Field, f: impl Fn(&FieldElem) -> FieldElem) -> Poly {
        Poly::new(target, self.coeffs.iter().map(f).collect())
    }

    /// Human-readable form in variable `var`, e.g. `x^2+2*x+1`.
    pub fn to_string_in(&self, field: &Field, var: &str) -> String {
        if self.is_zero() {
            return String::from("0");
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            let mut cs = format!("{}", field.display(c));
            let negative = cs.starts_with('-');
            if negative {
                cs.remove(0);
            }
            let compound = cs.contains(['+', '-', '*']);
            if !out.is_empty() || negative {
                out.push(if negative { '-' } else { '+' });
            }
            let body = if i == 0 {
                if compound {
                    format!("({cs})")
                } else {
                    cs
                }
            } else {
                let mono = if i == 1 { String::from(var) } else { format!("{var}^{i}") };
                if cs == "1" {
                    mono
                } else if compound || cs.contains('/') {
                    format!("({cs})*{mono}")
                } else {
                    format!("{cs}*{mono}")
                }
            };
            out.push_str(&body);
        }
        out
    }
}

/// Polynomial ring `k[x]` over a [`Field`].
#[derive(Clone, PartialEq, Debug)]
pub struct PolyRing {
    pub field: Field,
}

impl PolyRing {
    pub fn new(field: &Field) -> Self {
        PolyRing { field: field.clone() }
    }

    pub fn x(&self) -> Poly {
        Poly::x(&self.field)
    }

    pub fn constant(&self, c: FieldElem) -> Poly {
        Poly::constant(&self.field, c)
    }

    pub fn scale(&self, a: &Poly, c: &FieldElem) -> Poly {
        Poly::new(&self.field, a.coeffs.iter().map(|x| self.field.mul(x, c)).collect())
    }

    pub fn monic(&self, a: &Poly) -> Poly {
        match a.leading() {
            None => Poly::zero(),
            Some(lc) => {
                let inv = self.field.inv(lc).expect("nonzero leading coefficient");
                self.scale(a, &inv)
            }
        }
    }

    pub fn is_monic(&self, a: &Poly) -> bool {
        a.leading().is_some_and(|c| self.field.is_one(c))
    }

    /// Quotient and remainder with `deg r < deg b`.
    pub fn divrem(&self, a: &Poly, b: &Poly) -> Result<(Poly, Poly)> {
        let k = &self.field;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let inv_lc = k.inv(b.leading().unwrap()).unwrap();
        let mut rem = a.coeffs.clone();
        if rem.len() <= db {
            return Ok((Poly::zero(), a.clone()));
        }
        let mut quot = vec![k.zero(); rem.len() - db];
        for i in (db..rem.len()).rev() {
            if k.is_zero(&rem[i]) {
                continue;
            }
            let q = k.mul(&rem[i], &inv_lc);
            for (j, bc) in b.coeffs.iter().enumerate() {
                let t = i - db + j;
                rem[t] = k.sub(&rem[t], &k.mul(&q, bc));
            }
            quot[i - db] = q;
        }
        rem.truncate(db);
        Ok((Poly::new(k, quot), Poly::new(k, rem)))
    }

    pub fn rem(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        Ok(self.divrem(a, b)?.1)
    }

    /// Exact division; errors if `b` does not divide `a`.
    pub fn div_exact(&self, a: &Poly, b: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(a, b)?;
        if !r.is_zero() {
            return Err(Error::InvalidInput(String::from("inexact polynomial division")));
        }
        Ok(q)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, a: &Poly, b: &Poly) -> Poly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = self.rem(&a, &b).unwrap();
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s*a + t*b = g` and `g` monic.
    pub fn ext_gcd(&self, a: &Poly, b: &Poly) -> (Poly, Poly, Poly) {
        let k = &self.field;
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Poly::one(k), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one(k));
        while !r1.is_zero() {
            let (q, r) = self.divrem(&r0, &r1).unwrap();
            r0 = core::mem::replace(&mut r1, r);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            s0 = core::mem::replace(&mut s1, s);
            let t = self.sub(&t0, &self.mul(&q, &t1));
            t0 = core::mem::replace(&mut t1, t);
        }
        match r0.leading() {
            None => (r0, s0, t0),
            Some(lc) => {
                let inv = k.inv(lc).unwrap();
                (self.scale(&r0, &inv), self.scale(&s0, &inv), self.scale(&t0, &inv))
            }
        }
    }

    /// `b` with `a*b = 1 (mod m)` and `deg b < deg m`.
    pub fn invmod(&self, a: &Poly, m: &Poly) -> Result<Poly> {
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = self.rem(a, m)?;
        let (g, s, _) = self.ext_gcd(&a, m);
        if g.deg() != 0 {
            return Err(Error::NotCoprime);
        }
        self.rem(&s, m)
    }

    pub fn mulmod(&self, a: &Poly, b: &Poly, m: &Poly) -> Poly {
        self.rem(&self.mul(a, b), m).unwrap()
    }

    /// `a^e mod m` with a big exponent.
    pub fn powmod(&self, a: &Poly, e: &BigUint, m: &Poly) -> Poly {
        let mut acc = self.rem(&Poly::one(&self.field), m).unwrap();
        let a = self.rem(a, m).unwrap();
        for i in (0..e.bits()).rev() {
            acc = self.mulmod(&acc, &acc, m);
            if e.bit(i) {
                acc = self.mulmod(&acc, &a, m);
            }
        }
        acc
    }

    pub fn derivative(&self, a: &Poly) -> Poly {
        let k = &self.field;
        Poly::new(
            k,
            a.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| k.mul(&k.from_int(i as i64), c))
                .collect(),
        )
    }

    pub fn eval(&self, a: &Poly, x: &FieldElem) -> FieldElem {
        let k = &self.field;
        a.coeffs.iter().rev().fold(k.zero(), |acc, c| k.add(&k.mul(&acc, x), c))
    }

    /// `a(x + shift)`.
    pub fn shift(&self, a: &Poly, shift: &FieldElem) -> Poly {
        let lin = Poly::new(&self.field, vec![shift.clone(), self.field.one()]);
        a.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| self.add(&self.mul(&acc, &lin), &self.constant(c.clone())))
    }

    /// Exponent of the largest power of `p` dividing `a` (for `a != 0`), and the cofactor.
    pub fn strip_factor(&self, a: &Poly, p: &Poly) -> (u32, Poly) {
        let mut n = 0;
        let mut cur = a.clone();
        loop {
            let (q, r) = self.divrem(&cur, p).unwrap();
            if !r.is_zero() || cur.is_zero() {
                return (n, cur);
            }
            n += 1;
            cur = q;
        }
    }
}

impl Ring for PolyRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn one(&self) -> Poly {
        Poly::one(&self.field)
    }

    fn from_int(&self, n: i64) -> Poly {
        Poly::constant(&self.field, self.field.from_int(n))
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let k = &self.field;
        let n = a.coeffs.len().max(b.coeffs.len());
        Poly::new(k, (0..n).map(|i| k.add(&a.coeff(k, i), &b.coeff(k, i))).collect())
    }

    fn neg(&self, a: &Poly) -> Poly {
        Poly::new(&self.field, a.coeffs.iter().map(|c| self.field.neg(c)).collect())
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let k = &self.field;
        let mut out = vec![k.zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if k.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                out[i + j] = k.add(&out[i + j], &k.mul(x, y));
            }
        }
        Poly::new(k, out)
    }

    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }

    fn inv(&self, a: &Poly) -> Option<Poly> {
        if a.deg() == 0 {
            Some(self.constant(self.field.inv(&a.coeffs[0])?))
        } else {
            None
        }
    }

    fn write_elem(&self, a: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&a.to_string_in(&self.field, "x"))
    }
}
