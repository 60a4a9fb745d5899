use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{poly_factor, Field, FieldElem, Irreducibility, Poly, PolyRing, Ring};
use crate::{Error, Result};

/// A monic irreducible factor with a signed multiplicity.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaceFactor {
    pub poly: Poly,
    pub exponent: i64,
    pub irreducibility: Irreducibility,
}

/// `leading * prod p_i^{e_i}` with `e_i` of either sign.
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredForm {
    pub leading: FieldElem,
    pub factors: Vec<PlaceFactor>,
}

/// An element `num/den` of `k(x)`, reduced with monic denominator.
///
/// Known irreducible factors (declared by the caller or found earlier) are
/// carried along and tried first when the function is factored.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    field: Field,
    num: Poly,
    den: Poly,
    known: Vec<(Poly, Irreducibility)>,
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.num == other.num && self.den == other.den
    }
}

impl RationalFunction {
    pub fn new(field: &Field, num: &Poly, den: &Poly) -> Result<Self> {
        let ring = PolyRing::new(field);
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = ring.gcd(num, den);
        let (mut num, mut den) = if num.is_zero() {
            (Poly::zero(), ring.one())
        } else {
            (ring.div_exact(num, &g)?, ring.div_exact(den, &g)?)
        };
        let lc = den.leading().unwrap().clone();
        if !field.is_one(&lc) {
            let inv = field.inv(&lc).unwrap();
            num = ring.scale(&num, &inv);
            den = ring.scale(&den, &inv);
        }
        Ok(RationalFunction { field: field.clone(), num, den, known: Vec::new() })
    }

    pub fn from_poly(field: &Field, p: &Poly) -> Self {
        Self::new(field, p, &Poly::one(field)).unwrap()
    }

    pub fn constant(field: &Field, c: FieldElem) -> Self {
        Self::from_poly(field, &Poly::constant(field, c))
    }

    pub fn x(field: &Field) -> Self {
        Self::from_poly(field, &Poly::x(field))
    }

    /// Builds `leading * prod p_i^{e_i}` from declared irreducible factors.
    pub fn from_factors(field: &Field, leading: &FieldElem, factors: &[(Poly, i64)], irreducibility: Irreducibility) -> Result<Self> {
        let ring = PolyRing::new(field);
        let mut num = ring.constant(leading.clone());
        let mut den = ring.one();
        let mut known = Vec::new();
        for (p, e) in factors {
            if p.deg() < 1 {
                return Err(Error::InvalidInput("declared factors must be nonconstant".into()));
            }
            let p = ring.monic(p);
            let pe = ring.pow(&p, e.unsigned_abs());
            if *e >= 0 {
                num = ring.mul(&num, &pe);
            } else {
                den = ring.mul(&den, &pe);
            }
            known.push((p, irreducibility));
        }
        let mut f = Self::new(field, &num, &den)?;
        f.known = known;
        Ok(f)
    }

    pub fn with_known_factors(mut self, known: &[(Poly, Irreducibility)]) -> Self {
        self.add_known(known);
        self
    }

    fn add_known(&mut self, known: &[(Poly, Irreducibility)]) {
        for (p, i) in known {
            if !self.known.iter().any(|(q, _)| q == p) {
                self.known.push((p.clone(), *i));
            }
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn known_factors(&self) -> &[(Poly, Irreducibility)] {
        &self.known
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    fn ring(&self) -> PolyRing {
        PolyRing::new(&self.field)
    }

    fn combine(&self, other: &Self, num: Poly, den: Poly) -> Result<Self> {
        let mut out = Self::new(&self.field, &num, &den)?;
        out.add_known(&self.known);
        out.add_known(&other.known);
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        let r = self.ring();
        let num = r.add(&r.mul(&self.num, &other.den), &r.mul(&other.num, &self.den));
        self.combine(other, num, r.mul(&self.den, &other.den)).unwrap()
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.num = self.ring().neg(&self.num);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let r = self.ring();
        self.combine(other, r.mul(&self.num, &other.num), r.mul(&self.den, &other.den)).unwrap()
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = self.ring();
        self.combine(other, r.mul(&self.num, &other.den), r.mul(&self.den, &other.num))
    }

    pub fn pow(&self, n: i64) -> Result<Self> {
        let r = self.ring();
        let (a, b) = if n >= 0 { (&self.num, &self.den) } else { (&self.den, &self.num) };
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let e = n.unsigned_abs();
        self.combine(self, r.pow(a, e), r.pow(b, e))
    }

    /// `d/dx`.
    pub fn derivative(&self) -> Self {
        let r = self.ring();
        let num = r.sub(&r.mul(&r.derivative(&self.num), &self.den), &r.mul(&self.num, &r.derivative(&self.den)));
        self.combine(self, num, r.mul(&self.den, &self.den)).unwrap()
    }

    pub fn eval(&self, a: &FieldElem) -> Result<FieldElem> {
        let r = self.ring();
        let d = r.eval(&self.den, a);
        self.field.div(&r.eval(&self.num, a), &d)
    }

    /// Coefficients mapped into `target`, e.g. after base change.
    pub fn map_field(&self, target: &Field, f: impl Fn(&FieldElem) -> FieldElem) -> Result<Self> {
        Self::new(target, &self.num.map(target, &f), &self.den.map(target, &f))
    }

    fn factor_poly(&self, a: &Poly, sign: i64, out: &mut Vec<PlaceFactor>) -> Result<FieldElem> {
        let r = self.ring();
        let mut rest = a.clone();
        for (p, irr) in &self.known {
            let (m, q) = r.strip_factor(&rest, p);
            if m > 0 {
                out.push(PlaceFactor { poly: p.clone(), exponent: sign * m as i64, irreducibility: *irr });
                rest = q;
            }
        }
        let fac = poly_factor(&self.field, &rest)?;
        for f in fac.factors {
            out.push(PlaceFactor { poly: f.poly, exponent: sign * f.multiplicity as i64, irreducibility: f.irreducibility });
        }
        Ok(fac.leading)
    }

    /// The factorization into places of the affine line.
    ///
    /// Fails with [`Error::Unsplit`] when a factor could not be proven
    /// irreducible and was not declared.
    pub fn factored(&self) -> Result<FactoredForm> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut factors = Vec::new();
        let leading = self.factor_poly(&self.num, 1, &mut factors)?;
        self.factor_poly(&self.den, -1, &mut factors)?;
        if let Some(f) = factors.iter().find(|f| f.irreducibility == Irreducibility::Unsplit) {
            return Err(Error::Unsplit(f.poly.to_string_in(&self.field, "x")));
        }
        factors.sort_by(|a, b| (a.poly.deg(), &a.poly).cmp(&(b.poly.deg(), &b.poly)));
        Ok(FactoredForm { leading, factors })
    }

    /// Monic irreducible factors of the denominator with their (negative)
    /// exponents; the numerator is never factored.
    pub fn pole_factors(&self) -> Result<Vec<PlaceFactor>> {
        let mut factors = Vec::new();
        self.factor_poly(&self.den, -1, &mut factors)?;
        if let Some(f) = factors.iter().find(|f| f.irreducibility == Irreducibility::Unsplit) {
            return Err(Error::Unsplit(f.poly.to_string_in(&self.field, "x")));
        }
        factors.sort_by(|a, b| (a.poly.deg(), &a.poly).cmp(&(b.poly.deg(), &b.poly)));
        Ok(factors)
    }

    /// `deg(den) - deg(num)`, the valuation at infinity.
    pub fn valuation_at_infinity(&self) -> i64 {
        self.den.deg() - self.num.deg()
    }

    pub fn to_string_in(&self, var: &str) -> alloc::string::String {
        let n = self.num.to_string_in(&self.field, var);
        if self.den.deg() == 0 {
            return n;
        }
        let d = self.den.to_string_in(&self.field, var);
        let wrap = |s: alloc::string::String, p: &Poly| if p.coeffs().iter().filter(|c| !self.field.is_zero(c)).count() > 1 || s.contains(['*', '^', '/']) { format!("({s})") } else { s };
        format!("{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("x"))
    }
}
