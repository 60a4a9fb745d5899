use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{FiniteAlgebra, Poly, Ring};
use crate::{Error, Result};

/// A base field: the rationals, a prime field, or `F_p[u]/(m(u))`.
#[derive(Clone)]
pub struct Field(Arc<FieldKind>);

#[derive(Clone, Debug)]
pub enum FieldKind {
    Rationals,
    Prime(u64),
    /// `modulus` is monic, coefficients ascending, degree at least 2.
    Extension {
        p: u64,
        modulus: Vec<u64>,
        name: String,
    },
}

/// Element of a [`Field`]. The variant always matches the field's kind.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum FieldElem {
    Rational(BigRational),
    Mod(u64),
    /// Coordinates in the power basis `1, u, ..., u^(d-1)`.
    Ext(Vec<u64>),
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const SMALL: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &q in &SMALL {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    if n < 1 << 16 {
        let mut d = 41;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 2;
        }
        return true;
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &SMALL {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

impl Field {
    pub fn rationals() -> Self {
        Field(Arc::new(FieldKind::Rationals))
    }

    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldKind::Prime(p))))
    }

    /// `F_p[u]/(modulus)` with the generator printed as `u`.
    pub fn extension(p: u64, modulus: &[u64]) -> Result<Self> {
        Self::extension_named(p, modulus, "u")
    }

    /// Builds `F_p[name]/(modulus)`; `modulus` is given with ascending
    /// coefficients and must be monic irreducible of degree at least 2.
    pub fn extension_named(p: u64, modulus: &[u64], name: &str) -> Result<Self> {
        let base = Field::prime(p)?;
        let m: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        let shown = Poly::from_u64(&base, &m).to_string_in(&base, name);
        if m.len() < 3 || *m.last().unwrap() != 1 {
            return Err(Error::ReducibleModulus(shown));
        }
        let poly = Poly::from_u64(&base, &m);
        if !super::factor::is_irreducible(&base, &poly) {
            return Err(Error::ReducibleModulus(shown));
        }
        Ok(Field(Arc::new(FieldKind::Extension {
            p,
            modulus: m,
            name: name.to_string(),
        })))
    }

    /// `F_{p^d}` defined by the first monic irreducible of degree `d` in
    /// lexicographic order of its lower coefficients.
    pub fn default_extension(p: u64, d: usize) -> Result<Self> {
        if d == 1 {
            return Field::prime(p);
        }
        let base = Field::prime(p)?;
        let mut coeffs = vec![0u64; d + 1];
        coeffs[d] = 1;
        loop {
            let poly = Poly::from_u64(&base, &coeffs);
            if super::factor::is_irreducible(&base, &poly) {
                return Field::extension(p, &coeffs);
            }
            // odometer over the lower d coefficients
            let mut i = 0;
            loop {
                if i == d {
                    return Err(Error::InvalidInput("no irreducible polynomial found".into()));
                }
                coeffs[i] += 1;
                if coeffs[i] == p {
                    coeffs[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }

    pub fn kind(&self) -> &FieldKind {
        &self.0
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match &*self.0 {
            FieldKind::Rationals => 0,
            FieldKind::Prime(p) => *p,
            FieldKind::Extension { p, .. } => *p,
        }
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    pub fn is_prime_field(&self) -> bool {
        !matches!(&*self.0, FieldKind::Extension { .. })
    }

    pub fn prime_field(&self) -> Field {
        match &*self.0 {
            FieldKind::Extension { p, .. } => Field(Arc::new(FieldKind::Prime(*p))),
            _ => self.clone(),
        }
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<BigUint> {
        match &*self.0 {
            FieldKind::Rationals => None,
            _ => Some(BigUint::from(self.characteristic()).pow(self.degree() as u32)),
        }
    }

    /// Number of elements when it fits in a `u64`.
    pub fn small_order(&self) -> Option<u64> {
        self.order().and_then(|q| q.to_u64())
    }

    /// The generator `u` of an extension field.
    pub fn generator(&self) -> Option<FieldElem> {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => {
                let mut v = vec![0; modulus.len() - 1];
                v[1] = 1;
                Some(FieldElem::Ext(v))
            }
            _ => None,
        }
    }

    pub fn generator_name(&self) -> Option<&str> {
        match &*self.0 {
            FieldKind::Extension { name, .. } => Some(name),
            _ => None,
        }
    }

    /// Modulus of an extension as a polynomial over the prime field.
    pub fn modulus(&self) -> Option<Poly> {
        match &*self.0 {
            FieldKind::Extension { modulus, .. } => Some(Poly::from_u64(&self.prime_field(), modulus)),
            _ => None,
        }
    }

    /// The `i`-th element of a finite field in base-`p` digit order.
    pub fn element_from_index(&self, mut i: u64) -> FieldElem {
        match &*self.0 {
            FieldKind::Rationals => FieldElem::Rational(BigRational::from_integer(BigInt::from(i))),
            FieldKind::Prime(p) => FieldElem::Mod(i % p),
            FieldKind::Extension { p, modulus, .. } => {
                let d = modulus.len() - 1;
                let mut v = vec![0; d];
                for c in v.iter_mut() {
                    *c = i % p;
                    i /= p;
                }
                FieldElem::Ext(v)
            }
        }
    }

    pub fn rational(&self, num: i64, den: i64) -> Result<FieldElem> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        self.div(&self.from_int(num), &self.from_int(den))
    }

    /// Embeds an element of the prime field.
    pub fn from_prime(&self, c: &FieldElem) -> FieldElem {
        match (&*self.0, c) {
            (FieldKind::Extension { modulus, .. }, FieldElem::Mod(a)) => {
                let mut v = vec![0; modulus.len() - 1];
                v[0] = *a;
                FieldElem::Ext(v)
            }
            _ => c.clone(),
        }
    }

    /// Reads a prime-field element back out, if `a` lies in the prime field.
    pub fn to_prime(&self, a: &FieldElem) -> Option<FieldElem> {
        match a {
            FieldElem::Ext(v) => {
                if v[1..].iter().all(|&c| c == 0) {
                    Some(FieldElem::Mod(v[0]))
                } else {
                    None
                }
            }
            other => Some(other.clone()),
        }
    }

    /// Residue of a rational number; fails when the denominator vanishes.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElem> {
        match &*self.0 {
            FieldKind::Rationals => Ok(FieldElem::Rational(q.clone())),
            _ => {
                let p = BigInt::from(self.characteristic());
                let reduce = |x: &BigInt| -> i64 {
                    let r = ((x % &p) + &p) % &p;
                    r.to_i64().unwrap()
                };
                let n = self.from_int(reduce(q.numer()));
                let d = self.from_int(reduce(q.denom()));
                self.div(&n, &d)
            }
        }
    }

    pub fn from_integer(&self, n: &BigInt) -> FieldElem {
        self.from_rational(&BigRational::from_integer(n.clone())).unwrap()
    }

    fn ext_mul(p: u64, modulus: &[u64], a: &[u64], b: &[u64]) -> Vec<u64> {
        let d = modulus.len() - 1;
        let mut prod = vec![0u64; 2 * d - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = add_mod(prod[i + j], mul_mod(x, y, p), p);
            }
        }
        for k in (d..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in modulus[..d].iter().enumerate() {
                let t = k - d + i;
                prod[t] = add_mod(prod[t], neg_mod(mul_mod(c, m, p), p), p);
            }
        }
        prod.truncate(d);
        prod
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (&*self.0, &*other.0) {
            (FieldKind::Rationals, FieldKind::Rationals) => true,
            (FieldKind::Prime(p), FieldKind::Prime(q)) => p == q,
            (
                FieldKind::Extension { p, modulus, .. },
                FieldKind::Extension { p: q, modulus: m2, .. },
            ) => p == q && modulus == m2,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            FieldKind::Rationals => f.write_str("Q"),
            FieldKind::Prime(p) => write!(f, "F{p}"),
            FieldKind::Extension { p, modulus, name } => {
                let q = BigUint::from(*p).pow((modulus.len() - 1) as u32);
                let m = Poly::from_u64(&self.prime_field(), modulus);
                write!(f, "F{q}:{}", m.to_string_in(&self.prime_field(), name))
            }
        }
    }
}

impl Ring for Field {
    type Elem = FieldElem;

    fn zero(&self) -> FieldElem {
        self.from_int(0)
    }

    fn one(&self) -> FieldElem {
        self.from_int(1)
    }

    fn from_int(&self, n: i64) -> FieldElem {
        match &*self.0 {
            FieldKind::Rationals => FieldElem::Rational(BigRational::from_integer(BigInt::from(n))),
            FieldKind::Prime(p) => FieldElem::Mod(n.rem_euclid(*p as i64) as u64),
            FieldKind::Extension { p, modulus, .. } => {
                let mut v = vec![0; modulus.len() - 1];
                v[0] = (n as i128).rem_euclid(*p as i128) as u64;
                FieldElem::Ext(v)
            }
        }
    }

    fn add(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (&*self.0, a, b) {
            (_, FieldElem::Rational(x), FieldElem::Rational(y)) => FieldElem::Rational(x + y),
            (FieldKind::Prime(p), FieldElem::Mod(x), FieldElem::Mod(y)) => FieldElem::Mod(add_mod(*x, *y, *p)),
            (FieldKind::Extension { p, .. }, FieldElem::Ext(x), FieldElem::Ext(y)) => {
                FieldElem::Ext(x.iter().zip(y).map(|(&s, &t)| add_mod(s, t, *p)).collect())
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    fn neg(&self, a: &FieldElem) -> FieldElem {
        match (&*self.0, a) {
            (_, FieldElem::Rational(x)) => FieldElem::Rational(-x),
            (FieldKind::Prime(p), FieldElem::Mod(x)) => FieldElem::Mod(neg_mod(*x, *p)),
            (FieldKind::Extension { p, .. }, FieldElem::Ext(x)) => {
                FieldElem::Ext(x.iter().map(|&s| neg_mod(s, *p)).collect())
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    fn mul(&self, a: &FieldElem, b: &FieldElem) -> FieldElem {
        match (&*self.0, a, b) {
            (_, FieldElem::Rational(x), FieldElem::Rational(y)) => FieldElem::Rational(x * y),
            (FieldKind::Prime(p), FieldElem::Mod(x), FieldElem::Mod(y)) => FieldElem::Mod(mul_mod(*x, *y, *p)),
            (FieldKind::Extension { p, modulus, .. }, FieldElem::Ext(x), FieldElem::Ext(y)) => {
                FieldElem::Ext(Field::ext_mul(*p, modulus, x, y))
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    fn is_zero(&self, a: &FieldElem) -> bool {
        match a {
            FieldElem::Rational(x) => x.is_zero(),
            FieldElem::Mod(x) => *x == 0,
            FieldElem::Ext(v) => v.iter().all(|&c| c == 0),
        }
    }

    fn inv(&self, a: &FieldElem) -> Option<FieldElem> {
        if self.is_zero(a) {
            return None;
        }
        match (&*self.0, a) {
            (_, FieldElem::Rational(x)) => Some(FieldElem::Rational(x.recip())),
            (FieldKind::Prime(p), FieldElem::Mod(x)) => inv_mod(*x, *p).map(FieldElem::Mod),
            (FieldKind::Extension { .. }, FieldElem::Ext(_)) => {
                // a^(q-2) in the multiplicative group of order q-1
                let e = self.order().unwrap() - 2u32;
                let mut acc = self.one();
                let bits = e.bits();
                for i in (0..bits).rev() {
                    acc = self.mul(&acc, &acc);
                    if e.bit(i) {
                        acc = self.mul(&acc, a);
                    }
                }
                Some(acc)
            }
            _ => panic!("field element does not belong to {self}"),
        }
    }

    fn is_unit(&self, a: &FieldElem) -> bool {
        !self.is_zero(a)
    }

    fn is_field(&self) -> bool {
        true
    }

    fn write_elem(&self, a: &FieldElem, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match a {
            FieldElem::Rational(x) => {
                if x.is_integer() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            FieldElem::Mod(x) => write!(f, "{x}"),
            FieldElem::Ext(v) => {
                let name = self.generator_name().unwrap_or("u");
                let prime = self.prime_field();
                f.write_str(&Poly::from_u64(&prime, v).to_string_in(&prime, name))
            }
        }
    }
}

impl FiniteAlgebra for Field {
    fn base_field(&self) -> Field {
        self.prime_field()
    }

    fn dimension(&self) -> usize {
        self.degree()
    }

    fn coordinates(&self, a: &FieldElem) -> Vec<FieldElem> {
        match a {
            FieldElem::Ext(v) => v.iter().map(|&c| FieldElem::Mod(c)).collect(),
            other => vec![other.clone()],
        }
    }

    fn from_coordinates(&self, coords: &[FieldElem]) -> FieldElem {
        match &*self.0 {
            FieldKind::Extension { .. } => FieldElem::Ext(
                coords
                    .iter()
                    .map(|c| match c {
                        FieldElem::Mod(x) => *x,
                        _ => panic!("coordinate is not in the prime field"),
                    })
                    .collect(),
            ),
            _ => coords[0].clone(),
        }
    }

    fn embed(&self, c: &FieldElem) -> FieldElem {
        self.from_prime(c)
    }

    fn norm_over(&self, a: &FieldElem, over: &Field) -> Result<FieldElem> {
        if self == over {
            Ok(a.clone())
        } else if self.prime_field() == *over {
            Ok(self.norm(a))
        } else {
            Err(Error::MismatchedTower)
        }
    }

    fn trace_over(&self, a: &FieldElem, over: &Field) -> Result<FieldElem> {
        if self == over {
            Ok(a.clone())
        } else if self.prime_field() == *over {
            Ok(self.trace(a))
        } else {
            Err(Error::MismatchedTower)
        }
    }

    fn degree_over(&self, over: &Field) -> Result<usize> {
        if self == over {
            Ok(1)
        } else if self.prime_field() == *over {
            Ok(self.degree())
        } else {
            Err(Error::MismatchedTower)
        }
    }
}

impl FieldElem {
    /// Integer value of a rational element, if it is an integer fitting `i64`.
    pub fn as_i64(&self) -> Option<i64> {
        match self {
            FieldElem::Rational(x) if x.is_integer() => x.numer().to_i64(),
            FieldElem::Mod(x) => i64::try_from(*x).ok(),
            _ => None,
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        matches!(self, FieldElem::Rational(x) if x.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(65_537));
        assert!(!is_prime(65_537 * 3));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(Field::prime(9).is_err());
    }

    #[test]
    fn f4_arithmetic() {
        let f4 = Field::extension(2, &[1, 1, 1]).unwrap();
        let u = f4.generator().unwrap();
        let u2 = f4.mul(&u, &u);
        assert_eq!(u2, f4.add(&u, &f4.one()));
        assert!(f4.is_one(&f4.mul(&u2, &u)));
        let inv = f4.inv(&u).unwrap();
        assert_eq!(inv, u2);
        assert_eq!(format!("{}", f4), "F4:u^2+u+1");
        assert_eq!(format!("{}", f4.display(&u2)), "u+1");
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 2)(x + 3) over F5
        assert!(matches!(Field::extension(5, &[1, 0, 1]), Err(Error::ReducibleModulus(_))));
        assert!(Field::extension(3, &[1, 0, 1]).is_ok());
    }

    #[test]
    fn default_extension_is_irreducible() {
        let f8 = Field::default_extension(2, 3).unwrap();
        assert_eq!(f8.small_order(), Some(8));
        let f25 = Field::default_extension(5, 2).unwrap();
        assert_eq!(f25.small_order(), Some(25));
    }

    #[test]
    fn rationals_reduce_mod_p() {
        let f7 = Field::prime(7).unwrap();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(f7.from_rational(&half).unwrap(), FieldElem::Mod(4));
        let bad = BigRational::new(BigInt::from(1), BigInt::from(7));
        assert!(f7.from_rational(&bad).is_err());
    }
}
