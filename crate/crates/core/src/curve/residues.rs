use alloc::vec::Vec;

use super::{local_expand, Place, PlaceEntry, RationalFunction, ReportKind, VerificationReport};
use crate::algebra::{Field, FieldElem, Matrix, PolyRing, Ring};
use crate::laurent::LaurentSeries;
use crate::symbols::{gf_cocycle_local, residue_coefficient, LoopAlgebraElement};
use crate::{Error, Result};

const SLACK: i64 = 4;

/// Runs `compute` at precision `prec` and `2 * prec` and insists on the
/// same answer.
fn stable<T: PartialEq>(prec: i64, compute: impl Fn(i64) -> Result<T>) -> Result<T> {
    let a = compute(prec)?;
    let b = compute(2 * prec)?;
    if a != b {
        return Err(Error::InvalidInput("result changed when the precision was doubled".into()));
    }
    Ok(a)
}

/// `tr_{k(P)/k} res_P (h dx)`.
///
/// Places of degree one use the local expansion; at infinity `dx = -t^-2 dt`.
/// At a place of degree `d > 1` the `P`-principal part `A / p^e` is split
/// off by partial fractions and the answer is its `x^-1` coefficient at
/// infinity.
pub fn trace_residue_at_place(h: &RationalFunction, place: &Place) -> Result<FieldElem> {
    let k = h.field();
    if h.is_zero() {
        return Ok(k.zero());
    }
    let v = place.valuation(h);
    match place {
        Place::Finite(p) if p.deg() == 1 => {
            if v >= 0 {
                return Ok(k.zero());
            }
            stable(-v + SLACK, |prec| local_expand(h, place, prec)?.coeff(-1))
        }
        Place::Infinity => stable((2 - v).max(0) + SLACK, |prec| Ok(k.neg(&local_expand(h, place, prec)?.coeff(1)?))),
        Place::Finite(p) => {
            if v >= 0 {
                return Ok(k.zero());
            }
            let ring = PolyRing::new(k);
            let e = -v as u64;
            let pe = ring.pow(p, e);
            let q = ring.div_exact(h.denominator(), &pe)?;
            let a = ring.mulmod(h.numerator(), &ring.invmod(&q, &pe)?, &pe);
            if a.deg() == pe.deg() - 1 {
                Ok(a.leading().unwrap().clone())
            } else {
                Ok(k.zero())
            }
        }
    }
}

fn pole_places(h: &RationalFunction) -> Result<Vec<Place>> {
    let mut places: Vec<Place> = if h.is_zero() { Vec::new() } else { h.pole_factors()?.into_iter().map(|f| Place::Finite(f.poly)).collect() };
    places.push(Place::Infinity);
    Ok(places)
}

/// The residue theorem for `f dg`: the traced residues at the poles of
/// `f dg/dx` and at infinity sum to zero.
pub fn verify_residue_theorem(f: &RationalFunction, g: &RationalFunction) -> Result<VerificationReport> {
    let k = f.field();
    let h = f.mul(&g.derivative());
    let mut entries = Vec::new();
    for place in pole_places(&h)? {
        let value = trace_residue_at_place(&h, &place)?;
        let (v_f, v_g) = if f.is_zero() || g.is_zero() { (0, 0) } else { (place.valuation(f), place.valuation(g)) };
        entries.push(PlaceEntry { place: place.name(k), deg: place.degree(), v_f, v_g, value });
    }
    let global = k.sum(entries.iter().map(|e| &e.value));
    let verified = k.is_zero(&global);
    Ok(VerificationReport { kind: ReportKind::Residues, field: k.clone(), places: entries, global, verified })
}

/// A rational function together with finitely many local corrections at
/// places of degree one.
#[derive(Clone, Debug)]
pub struct AdeleVector {
    pub default: RationalFunction,
    pub perturbations: Vec<(Place, LaurentSeries<Field>)>,
}

/// `sum_x tr res_x(alpha dg)` for each test function `g`.
pub fn sigma_perp_pairings(alpha: &AdeleVector, tests: &[RationalFunction]) -> Result<Vec<FieldElem>> {
    let k = alpha.default.field();
    for (place, _) in &alpha.perturbations {
        if place.degree() != 1 {
            return Err(Error::InvalidInput("perturbations are supported at places of degree one only".into()));
        }
    }
    tests
        .iter()
        .map(|g| {
            let mut total = verify_residue_theorem(&alpha.default, g)?.global;
            if g.is_constant() {
                return Ok(total);
            }
            for (place, delta) in &alpha.perturbations {
                let need = delta.pole_order() + SLACK;
                let r = stable(need, |prec| residue_coefficient(delta, &local_expand(g, place, prec)?, k))?;
                total = k.add(&total, &r);
            }
            Ok(total)
        })
        .collect()
}

/// Forward inclusion of the residue pairing criterion: the pairing of a
/// global function with every test `g` vanishes.
pub fn sigma_perp_forward(alpha: &AdeleVector, tests: &[RationalFunction]) -> Result<bool> {
    let k = alpha.default.field();
    Ok(sigma_perp_pairings(alpha, tests)?.iter().all(|s| k.is_zero(s)))
}

/// Global vanishing of the Gelfand-Fuchs cocycle on `S (x) f`, `T (x) g`.
///
/// Places of degree one go through the matrix loop algebra on local
/// expansions; other places use `tr(ST)` times the traced residue. The sum
/// is cross-checked against `tr(ST)` times the residue theorem.
pub fn verify_gf_global(s: &Matrix<Field>, t: &Matrix<Field>, f: &RationalFunction, g: &RationalFunction) -> Result<VerificationReport> {
    let k = f.field();
    let trst = s.mul(t)?.trace();
    let h = f.mul(&g.derivative());
    let mut entries = Vec::new();
    for place in pole_places(&h)? {
        let (v_f, v_g) = if f.is_zero() || g.is_zero() { (0, 0) } else { (place.valuation(f), place.valuation(g)) };
        let value = if place.degree() == 1 && !f.is_zero() && !g.is_constant() {
            let need = (-v_f).max(0) + (-v_g).max(0) + SLACK;
            stable(need, |prec| {
                let a = LoopAlgebraElement::pure_tensor(s, &local_expand(f, &place, prec)?)?;
                let b = LoopAlgebraElement::pure_tensor(t, &local_expand(g, &place, prec)?)?;
                gf_cocycle_local(&a, &b, k)
            })?
        } else {
            k.mul(&trst, &trace_residue_at_place(&h, &place)?)
        };
        entries.push(PlaceEntry { place: place.name(k), deg: place.degree(), v_f, v_g, value });
    }
    let global = k.sum(entries.iter().map(|e| &e.value));
    let shortcut = k.mul(&trst, &verify_residue_theorem(f, g)?.global);
    let verified = k.is_zero(&global) && global == shortcut;
    Ok(VerificationReport { kind: ReportKind::GelfandFuchs, field: k.clone(), places: entries, global, verified })
}
