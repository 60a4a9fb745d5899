use alloc::vec::Vec;

use super::local::{unit_at_finite, unit_at_infinity};
use super::{relevant_places, Place, PlaceEntry, RationalFunction, ReportKind, VerificationReport};
use crate::algebra::{FiniteAlgebra, Ring};
use crate::cocycle::sign_aggregate;
use crate::{Error, Result};

/// `(-1)^{v(f) v(g) deg P} N_{k(P)/k}((f^{v(g)} / g^{v(f)})(P))`.
pub fn wrl_local_factor(f: &RationalFunction, g: &RationalFunction, place: &Place) -> Result<PlaceEntry> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroSeries);
    }
    let k = f.field();
    let (v_f, v_g) = (place.valuation(f), place.valuation(g));
    let deg = place.degree();
    let norm = match place {
        Place::Finite(p) => {
            let r = place.residue_ring(k).unwrap();
            let (uf, ug) = (unit_at_finite(f, p)?, unit_at_finite(g, p)?);
            let ratio = r.div(&r.pow_signed(&uf, v_g)?, &r.pow_signed(&ug, v_f)?)?;
            r.norm(&ratio)
        }
        Place::Infinity => {
            let (uf, ug) = (unit_at_infinity(f), unit_at_infinity(g));
            k.div(&k.pow_signed(&uf, v_g)?, &k.pow_signed(&ug, v_f)?)?
        }
    };
    let value = if (v_f * v_g * deg as i64) % 2 == 0 { norm } else { k.neg(&norm) };
    Ok(PlaceEntry { place: place.name(k), deg, v_f, v_g, value })
}

/// Weil reciprocity: the product of the local factors over every place.
///
/// The signed product is checked against the unsigned one times the sign
/// aggregated from the winding numbers `v * deg`.
pub fn verify_wrl(f: &RationalFunction, g: &RationalFunction) -> Result<VerificationReport> {
    let k = f.field();
    let places = relevant_places(f, g)?;
    let entries: Vec<PlaceEntry> = places.iter().map(|p| wrl_local_factor(f, g, p)).collect::<Result<_>>()?;
    let global = entries.iter().fold(k.one(), |acc, e| k.mul(&acc, &e.value));
    let windings: Vec<(i64, i64)> = entries.iter().map(|e| (e.v_f * e.deg as i64, e.v_g * e.deg as i64)).collect();
    let unsigned = entries.iter().fold(k.one(), |acc, e| {
        let sign_here = (e.v_f * e.v_g * e.deg as i64) % 2 != 0;
        k.mul(&acc, &if sign_here { k.neg(&e.value) } else { e.value.clone() })
    });
    let aggregated = if sign_aggregate(&windings) == 1 { unsigned } else { k.neg(&unsigned) };
    let verified = k.is_one(&global) && aggregated == global;
    Ok(VerificationReport { kind: ReportKind::Reciprocity, field: k.clone(), places: entries, global, verified })
}
