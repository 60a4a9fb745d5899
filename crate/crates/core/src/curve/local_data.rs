use alloc::string::String;
use alloc::vec::Vec;

use super::{PlaceEntry, ReportKind, VerificationReport};
use crate::algebra::{Field, FiniteAlgebra, Ring};
use crate::laurent::LaurentSeries;
use crate::symbols::{residue_coefficient, tame_symbol_signed};
use crate::Result;

/// Local expansions of `f` and `g` at one place of some curve, with
/// coefficients in the residue field of that place.
#[derive(Clone, Debug)]
pub struct LocalDatum {
    pub name: String,
    pub residue_field: Field,
    pub f: LaurentSeries<Field>,
    pub g: LaurentSeries<Field>,
}

fn entry(base: &Field, d: &LocalDatum, value: crate::FieldElem) -> Result<PlaceEntry> {
    Ok(PlaceEntry {
        place: d.name.clone(),
        deg: d.residue_field.degree_over(base)?,
        v_f: d.f.valuation()?,
        v_g: d.g.valuation()?,
        value,
    })
}

/// Reciprocity for user-supplied local data; completeness of the list of
/// places is the caller's responsibility.
pub fn verify_wrl_local(base: &Field, data: &[LocalDatum]) -> Result<VerificationReport> {
    let entries: Vec<PlaceEntry> = data
        .iter()
        .map(|d| entry(base, d, tame_symbol_signed(&d.f, &d.g, base)?))
        .collect::<Result<_>>()?;
    let global = entries.iter().fold(base.one(), |acc, e| base.mul(&acc, &e.value));
    let verified = base.is_one(&global);
    Ok(VerificationReport { kind: ReportKind::Reciprocity, field: base.clone(), places: entries, global, verified })
}

/// The residue theorem for user-supplied local data.
pub fn verify_residues_local(base: &Field, data: &[LocalDatum]) -> Result<VerificationReport> {
    let entries: Vec<PlaceEntry> = data
        .iter()
        .map(|d| entry(base, d, residue_coefficient(&d.f, &d.g, base)?))
        .collect::<Result<_>>()?;
    let global = base.sum(entries.iter().map(|e| &e.value));
    let verified = base.is_zero(&global);
    Ok(VerificationReport { kind: ReportKind::Residues, field: base.clone(), places: entries, global, verified })
}
