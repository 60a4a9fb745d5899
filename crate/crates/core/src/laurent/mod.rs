//! Truncated formal Laurent series `R((z))` with explicit precision.

mod factorize;

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::{max, min};
use core::fmt;

use crate::algebra::Ring;
use crate::{Error, Result};

pub use factorize::{CCFactorization, UnitFactorization};

/// Working precision, in coefficients above the valuation, used whenever an
/// exact input has to be turned into an infinite series.
pub const DEFAULT_PRECISION: i64 = 32;

/// `sum_{e >= low} c_e z^e`, known below `prec`.
///
/// `prec == None` marks an exact Laurent polynomial. Stored coefficients are
/// trimmed so that the first and last ones are nonzero.
#[derive(Clone)]
pub struct LaurentSeries<R: Ring> {
    ring: R,
    low: i64,
    coeffs: Vec<R::Elem>,
    prec: Option<i64>,
}

impl<R: Ring> LaurentSeries<R> {
    pub fn new(ring: &R, low: i64, coeffs: Vec<R::Elem>, prec: Option<i64>) -> Self {
        let mut s = LaurentSeries { ring: ring.clone(), low, coeffs, prec };
        if let Some(p) = prec {
            let keep = (p - low).clamp(0, s.coeffs.len() as i64) as usize;
            s.coeffs.truncate(keep);
        }
        s.normalize();
        s
    }

    /// Exact Laurent polynomial `sum c_i z^{low + i}`.
    pub fn polynomial(ring: &R, low: i64, coeffs: Vec<R::Elem>) -> Self {
        Self::new(ring, low, coeffs, None)
    }

    pub fn from_terms(ring: &R, terms: &[(i64, R::Elem)]) -> Self {
        if terms.is_empty() {
            return Self::zero(ring);
        }
        let low = terms.iter().map(|t| t.0).min().unwrap();
        let high = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![ring.zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            let slot = &mut coeffs[(e - low) as usize];
            *slot = ring.add(slot, c);
        }
        Self::polynomial(ring, low, coeffs)
    }

    pub fn zero(ring: &R) -> Self {
        Self::polynomial(ring, 0, Vec::new())
    }

    pub fn one(ring: &R) -> Self {
        Self::constant(ring, ring.one())
    }

    pub fn constant(ring: &R, c: R::Elem) -> Self {
        Self::polynomial(ring, 0, vec![c])
    }

    pub fn monomial(ring: &R, c: R::Elem, e: i64) -> Self {
        Self::polynomial(ring, e, vec![c])
    }

    /// The uniformizer `z`.
    pub fn z(ring: &R) -> Self {
        Self::monomial(ring, ring.one(), 1)
    }

    fn normalize(&mut self) {
        let r = &self.ring;
        while self.coeffs.last().is_some_and(|c| r.is_zero(c)) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| r.is_zero(c)).count();
        if lead == self.coeffs.len() {
            self.coeffs.clear();
            self.low = self.prec.unwrap_or_default();
        } else if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Exponent of the first stored coefficient (the precision for a
    /// series with no known nonzero coefficient).
    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn prec(&self) -> Option<i64> {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// True when every known coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest exponent with a stored nonzero coefficient.
    pub fn high(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.low + self.coeffs.len() as i64 - 1)
        }
    }

    /// Order of the pole at `z = 0`, zero for power series.
    pub fn pole_order(&self) -> i64 {
        if self.coeffs.is_empty() {
            0
        } else {
            max(0, -self.low)
        }
    }

    /// Coefficient of `z^e` without a precision check.
    pub(crate) fn c(&self, e: i64) -> R::Elem {
        if e < self.low || e >= self.low + self.coeffs.len() as i64 {
            self.ring.zero()
        } else {
            self.coeffs[(e - self.low) as usize].clone()
        }
    }

    /// Coefficient of `z^e`, or an error if it lies beyond the precision.
    pub fn coeff(&self, e: i64) -> Result<R::Elem> {
        match self.prec {
            Some(p) if e >= p => Err(Error::PrecisionExhausted { needed: e + 1, available: p }),
            _ => Ok(self.c(e)),
        }
    }

    /// Nonzero terms as `(exponent, coefficient)`.
    pub fn terms(&self) -> Vec<(i64, R::Elem)> {
        let r = &self.ring;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !r.is_zero(c))
            .map(|(i, c)| (self.low + i as i64, c.clone()))
            .collect()
    }

    /// Drops everything at or beyond `prec`.
    pub fn truncate(&self, prec: i64) -> Self {
        let p = match self.prec {
            Some(q) => min(q, prec),
            None => prec,
        };
        Self::new(&self.ring, self.low, self.coeffs.clone(), Some(p))
    }

    /// The exact sum of the terms with negative exponent.
    pub fn negative_part(&self) -> Self {
        let terms: Vec<_> = self.terms().into_iter().filter(|t| t.0 < 0).collect();
        Self::from_terms(&self.ring, &terms)
    }

    /// Terms with nonnegative exponent, keeping the precision.
    pub fn nonnegative_part(&self) -> Self {
        let terms: Vec<_> = self.terms().into_iter().filter(|t| t.0 >= 0).collect();
        let mut s = Self::from_terms(&self.ring, &terms);
        if let Some(p) = self.prec {
            s = s.truncate(p);
        }
        s
    }

    fn combine_prec(a: Option<i64>, b: Option<i64>) -> Option<i64> {
        match (a, b) {
            (Some(x), Some(y)) => Some(min(x, y)),
            (x, None) => x,
            (None, y) => y,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let r = &self.ring;
        let prec = Self::combine_prec(self.prec, other.prec);
        if self.is_zero() && other.is_zero() {
            return Self::new(r, 0, Vec::new(), prec);
        }
        let lo = match (self.is_zero(), other.is_zero()) {
            (true, _) => other.low,
            (_, true) => self.low,
            _ => min(self.low, other.low),
        };
        let hi = max(self.high().unwrap_or(lo), other.high().unwrap_or(lo));
        let coeffs = (lo..=hi).map(|e| r.add(&self.c(e), &other.c(e))).collect();
        Self::new(r, lo, coeffs, prec)
    }

    pub fn neg(&self) -> Self {
        let r = &self.ring;
        Self::new(r, self.low, self.coeffs.iter().map(|c| r.neg(c)).collect(), self.prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let r = &self.ring;
        Self::new(r, self.low, self.coeffs.iter().map(|x| r.mul(x, c)).collect(), self.prec)
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(&self.ring, self.low + k, self.coeffs.clone(), self.prec.map(|p| p + k))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let r = &self.ring;
        let prec = match (self.prec, other.prec) {
            (None, None) => None,
            (Some(p), None) => Some(p + other.effective_low()),
            (None, Some(q)) => Some(q + self.effective_low()),
            (Some(p), Some(q)) => Some(min(p + other.effective_low(), q + self.effective_low())),
        };
        if self.is_zero() || other.is_zero() {
            return Self::new(r, 0, Vec::new(), prec);
        }
        let low = self.low + other.low;
        let mut len = self.coeffs.len() + other.coeffs.len() - 1;
        if let Some(p) = prec {
            len = min(len, max(0, p - low) as usize);
        }
        let mut out = vec![r.zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || r.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                if !r.is_zero(b) {
                    out[i + j] = r.add(&out[i + j], &r.mul(a, b));
                }
            }
        }
        Self::new(r, low, out, prec)
    }

    /// `low` for a series with a known nonzero coefficient, the precision
    /// otherwise; used to bound unknown coefficients of a product.
    fn effective_low(&self) -> i64 {
        if self.coeffs.is_empty() {
            self.prec.unwrap_or(i64::MAX / 4)
        } else {
            self.low
        }
    }

    /// `z`-adic valuation: exponent of the first invertible coefficient.
    pub fn valuation(&self) -> Result<i64> {
        let r = &self.ring;
        if let Some(i) = self.coeffs.iter().position(|c| r.is_unit(c)) {
            return Ok(self.low + i as i64);
        }
        match self.prec {
            None if self.coeffs.is_empty() => Err(Error::ZeroSeries),
            None => Err(Error::NotAUnit),
            Some(p) => Err(Error::PrecisionExhausted { needed: p + 1, available: p }),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.valuation().is_ok()
    }

    /// Inverse, carrying the input precision; exact inputs are expanded to
    /// [`DEFAULT_PRECISION`] coefficients above their valuation.
    pub fn inv(&self) -> Result<Self> {
        let v = self.valuation()?;
        self.inv_to(self.prec.unwrap_or(v + DEFAULT_PRECISION))
    }

    /// Inverse of a unit computed from its coefficients below `prec`.
    pub fn inv_to(&self, prec: i64) -> Result<Self> {
        let r = &self.ring;
        let v = self.valuation()?;
        let c = self.c(v);
        let c_inv = r.inv(&c).ok_or(Error::NotAUnit)?;
        if self.is_exact() && self.coeffs.len() == 1 {
            return Ok(Self::monomial(r, c_inv, -v));
        }
        let src = if self.is_exact() { self.clone() } else { self.truncate(prec) };
        let rel = src.prec.unwrap_or(prec) - v;
        if rel <= 0 {
            return Err(Error::PrecisionExhausted { needed: v + 1, available: v + rel });
        }
        // self = c z^v (1 + h), h = h_neg + h_pos
        let unit = src.shift(-v).scale(&c_inv);
        let h = unit.sub(&Self::one(r));
        let h_neg = h.negative_part();
        let h_pos = h.nonnegative_part().truncate(rel);
        let p = h_pos.one_plus_inverse(rel);
        let q = p.mul(&h_neg);
        let mut acc = Self::one(r);
        let mut term = Self::one(r);
        let neg_q = q.neg();
        for _ in 1..r.nilpotency_index() {
            if q.is_zero() {
                break;
            }
            term = term.mul(&neg_q);
            acc = acc.add(&term);
        }
        Ok(p.mul(&acc).scale(&c_inv).shift(-v))
    }

    /// `(1 + self)^{-1}` for `self` supported in positive exponents, to
    /// relative precision `prec`.
    fn one_plus_inverse(&self, prec: i64) -> Self {
        let r = &self.ring;
        let prec = self.prec.map_or(prec, |p| min(p, prec));
        let n = max(prec, 0) as usize;
        let mut out: Vec<R::Elem> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = if k == 0 { r.one() } else { r.zero() };
            for i in 1..=k {
                let h = self.c(i as i64);
                if !r.is_zero(&h) {
                    acc = r.sub(&acc, &r.mul(&h, &out[k - i]));
                }
            }
            out.push(acc);
        }
        Self::new(r, 0, out, Some(prec))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        let prec_hint = match (self.prec, other.prec) {
            (None, None) => None,
            (p, q) => Self::combine_prec(p, q),
        };
        let inv = match prec_hint {
            Some(_) => other.inv()?,
            None => {
                let v = other.valuation()?;
                other.inv_to(v + DEFAULT_PRECISION)?
            }
        };
        Ok(self.mul(&inv))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    /// `d/dz`.
    pub fn derivative(&self) -> Self {
        let r = &self.ring;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| r.mul(&r.from_int(self.low + i as i64), c))
            .collect();
        Self::new(r, self.low - 1, coeffs, self.prec.map(|p| p - 1))
    }

    /// Agreement on every coefficient known in both series.
    pub fn agrees_with(&self, other: &Self) -> bool {
        let diff = self.sub(other);
        diff.is_zero()
    }

    /// Coefficient of `z^{-1}`, checked against the precision.
    pub fn residue(&self) -> Result<R::Elem> {
        self.coeff(-1)
    }

    pub fn map<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> LaurentSeries<S> {
        LaurentSeries::new(target, self.low, self.coeffs.iter().map(f).collect(), self.prec)
    }
}

impl<R: Ring> PartialEq for LaurentSeries<R> {
    fn eq(&self, other: &Self) -> bool {
        self.prec == other.prec && self.agrees_with(other)
    }
}

impl<R: Ring> fmt::Debug for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: Ring> fmt::Display for LaurentSeries<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.ring;
        let mut first = true;
        for (e, c) in self.terms() {
            let mut cs = alloc::format!("{}", r.display(&c));
            let negative = cs.starts_with('-') && !cs[1..].contains(['+', '-']);
            if negative {
                cs.remove(0);
            }
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let compound = cs.contains(['+', '-', ' ']);
            let cs = if compound { alloc::format!("({cs})") } else { cs };
            match (e, cs.as_str()) {
                (0, _) => f.write_str(&cs)?,
                (1, "1") => f.write_str("z")?,
                (_, "1") => write!(f, "z^{e}")?,
                (1, _) => write!(f, "{cs}*z")?,
                _ => write!(f, "{cs}*z^{e}")?,
            }
        }
        if let Some(p) = self.prec {
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "O(z^{p})")?;
        } else if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
