use alloc::vec::Vec;

use super::{LaurentSeries, DEFAULT_PRECISION};
use crate::algebra::Ring;
use crate::{Error, Result};

/// `s0 z^s prod_{i >= 1} (1 + s_i z^i)`, with only nonzero `s_i` listed.
#[derive(Clone, Debug)]
pub struct UnitFactorization<R: Ring> {
    pub leading: R::Elem,
    pub valuation: i64,
    pub tail: Vec<(i64, R::Elem)>,
    /// Absolute precision of the factored series.
    pub prec: i64,
}

/// `prod (1 - abar_i z^{-i}) prod (1 - a_i z^i)` for an element of the group
/// of series reducing to 1 modulo the maximal ideal.
///
/// `neg` holds `(i, abar_i)` with `i >= 1` in peeling order; exponents may
/// repeat. `pos` holds `(i, a_i)` with `i >= 0`, ascending.
#[derive(Clone, Debug)]
pub struct CCFactorization<R: Ring> {
    pub neg: Vec<(i64, R::Elem)>,
    pub pos: Vec<(i64, R::Elem)>,
    pub prec: i64,
}

impl<R: Ring> UnitFactorization<R> {
    pub fn expand(&self, ring: &R) -> LaurentSeries<R> {
        let mut out = LaurentSeries::monomial(ring, self.leading.clone(), self.valuation).truncate(self.prec);
        for (i, s) in &self.tail {
            out = out.mul(&LaurentSeries::from_terms(ring, &[(0, ring.one()), (*i, s.clone())]));
        }
        out
    }
}

impl<R: Ring> CCFactorization<R> {
    pub fn expand(&self, ring: &R) -> LaurentSeries<R> {
        let mut out = LaurentSeries::one(ring).truncate(self.prec);
        for (i, a) in &self.neg {
            out = out.mul(&LaurentSeries::from_terms(ring, &[(0, ring.one()), (-i, ring.neg(a))]));
        }
        for (i, a) in &self.pos {
            out = out.mul(&LaurentSeries::from_terms(ring, &[(0, ring.one()), (*i, ring.neg(a))]));
        }
        out
    }
}

/// Divides `u` (supported in `[0, prec)`) by `1 + s z^i` in place.
fn divide_by_binomial<R: Ring>(r: &R, u: &mut [R::Elem], i: usize, s: &R::Elem) {
    for n in i..u.len() {
        let t = r.mul(s, &u[n - i]);
        u[n] = r.sub(&u[n], &t);
    }
}

impl<R: Ring> LaurentSeries<R> {
    /// The unique `s0 z^s prod (1 + s_i z^i)` expression of a unit whose
    /// lowest coefficient is invertible.
    pub fn unit_factorize(&self) -> Result<UnitFactorization<R>> {
        let r = self.ring();
        let v = self.valuation()?;
        if v != self.low() {
            return Err(Error::NotAUnit);
        }
        let prec = self.prec().unwrap_or(v + DEFAULT_PRECISION);
        let leading = self.c(v);
        let inv = r.inv(&leading).ok_or(Error::NotAUnit)?;
        let rel = (prec - v) as usize;
        let mut u: Vec<R::Elem> = (0..rel).map(|k| r.mul(&self.c(v + k as i64), &inv)).collect();
        let mut tail = Vec::new();
        for i in 1..rel {
            let s = u[i].clone();
            if r.is_zero(&s) {
                continue;
            }
            divide_by_binomial(r, &mut u, i, &s);
            tail.push((i as i64, s));
        }
        Ok(UnitFactorization { leading, valuation: v, tail, prec })
    }

    /// Factors an element of `G_1(R)`: every coefficient lies in the maximal
    /// ideal except the constant one, which is `1` modulo it, and the
    /// negative part is finite.
    pub fn cc_factorize(&self) -> Result<CCFactorization<R>> {
        self.cc_factorize_to(DEFAULT_PRECISION)
    }

    /// As [`cc_factorize`](Self::cc_factorize); an exact input is expanded
    /// below `prec` once its negative part has been peeled off exactly.
    pub fn cc_factorize_to(&self, prec: i64) -> Result<CCFactorization<R>> {
        let r = self.ring();
        for (e, c) in self.terms() {
            let reduced_one = if e == 0 { !r.is_unit(&r.sub(&c, &r.one())) } else { !r.is_unit(&c) };
            if !reduced_one {
                return Err(Error::NotInG1(alloc::format!("coefficient of z^{e} is not congruent to {}", if e == 0 { 1 } else { 0 })));
            }
        }
        if self.is_zero() {
            return Err(Error::NotInG1("series is zero to the known precision".into()));
        }
        let mut g = self.clone();
        let mut neg = Vec::new();
        let budget = 4 * r.nilpotency_index() * (self.pole_order() as usize + 1) + 8;
        let mut sweeps = 0;
        while g.pole_order() > 0 {
            sweeps += 1;
            if sweeps > budget {
                return Err(Error::NotInG1("negative part does not vanish".into()));
            }
            for i in (1..=g.pole_order()).rev() {
                let a = g.c(-i);
                if r.is_zero(&a) {
                    continue;
                }
                // g = (1 + a z^{-i}) g'
                let abar = r.neg(&a);
                let mut inverse = vec_one(r);
                let mut power = r.one();
                for k in 1.. {
                    power = r.mul(&power, &abar);
                    if r.is_zero(&power) {
                        break;
                    }
                    inverse.push((-(k as i64) * i, power.clone()));
                }
                g = g.mul(&LaurentSeries::from_terms(r, &inverse));
                neg.push((i, abar));
            }
        }
        let prec = g.prec().unwrap_or(prec);
        if prec <= 0 {
            return Err(Error::PrecisionExhausted { needed: 1, available: prec });
        }
        let c0 = g.c(0);
        let c0_inv = r.inv(&c0).ok_or_else(|| Error::NotInG1("constant term is not a unit".into()))?;
        let mut pos = Vec::new();
        let a0 = r.sub(&r.one(), &c0);
        if !r.is_zero(&a0) {
            pos.push((0, a0));
        }
        let mut u: Vec<R::Elem> = (0..prec).map(|k| r.mul(&g.c(k), &c0_inv)).collect();
        for i in 1..prec as usize {
            let s = u[i].clone();
            if r.is_zero(&s) {
                continue;
            }
            divide_by_binomial(r, &mut u, i, &s);
            pos.push((i as i64, r.neg(&s)));
        }
        Ok(CCFactorization { neg, pos, prec })
    }
}

fn vec_one<R: Ring>(r: &R) -> Vec<(i64, R::Elem)> {
    alloc::vec![(0, r.one())]
}
