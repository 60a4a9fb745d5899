use super::{Place, RationalFunction};
use crate::algebra::{Field, FieldElem, PolyRing, Ring};
use crate::laurent::LaurentSeries;
use crate::{Error, Result};

/// Expansion of `f` in the local parameter at a place of degree one:
/// `t = x - a` at `x = a`, `t = 1/x` at infinity. `prec` counts
/// coefficients above the valuation.
pub fn local_expand(f: &RationalFunction, place: &Place, prec: i64) -> Result<LaurentSeries<Field>> {
    let k = f.field();
    if f.is_zero() {
        return Err(Error::ZeroSeries);
    }
    let ring = PolyRing::new(k);
    let (num, den, shift) = match place {
        Place::Finite(p) if p.deg() == 1 => {
            let a = place.rational_point(k).unwrap();
            (ring.shift(f.numerator(), &a), ring.shift(f.denominator(), &a), 0)
        }
        Place::Finite(_) => {
            return Err(Error::InvalidInput("digit expansions are only produced at places of degree one".into()));
        }
        Place::Infinity => {
            let (dn, dd) = (f.numerator().deg(), f.denominator().deg());
            let num = f.numerator().reversed(k, dn as usize);
            let den = f.denominator().reversed(k, dd as usize);
            (num, den, dd - dn)
        }
    };
    let n = LaurentSeries::polynomial(k, 0, num.coeffs().to_vec());
    let d = LaurentSeries::polynomial(k, 0, den.coeffs().to_vec());
    let vd = d.valuation()?;
    let inv = d.inv_to(vd + prec)?;
    Ok(n.mul(&inv).shift(shift))
}

/// `(f / pi^{v(f)})(P)` as an element of the residue ring for a finite
/// place with `pi = p`, or of `k` at infinity with `pi = 1/x`.
pub(crate) fn unit_at_finite(f: &RationalFunction, p: &crate::Poly) -> Result<crate::Poly> {
    let ring = PolyRing::new(f.field());
    let (_, num) = ring.strip_factor(f.numerator(), p);
    let (_, den) = ring.strip_factor(f.denominator(), p);
    let den_inv = ring.invmod(&den, p)?;
    Ok(ring.mulmod(&num, &den_inv, p))
}

pub(crate) fn unit_at_infinity(f: &RationalFunction) -> FieldElem {
    let k = f.field();
    k.div(f.numerator().leading().unwrap(), f.denominator().leading().unwrap()).unwrap()
}
