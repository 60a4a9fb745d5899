//! The projective line over an exact field: rational functions, places,
//! divisors, local expansions and the global reciprocity verifiers.

mod local;
mod local_data;
mod place;
mod rational;
mod residues;
mod wrl;

use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::{Field, FieldElem};

pub use local::local_expand;
pub use local_data::{verify_residues_local, verify_wrl_local, LocalDatum};
pub use place::{divisor_of, relevant_places, Divisor, Place};
pub use rational::{FactoredForm, PlaceFactor, RationalFunction};
pub use residues::{
    sigma_perp_forward, sigma_perp_pairings, trace_residue_at_place, verify_gf_global, verify_residue_theorem,
    AdeleVector,
};
pub use wrl::{verify_wrl, wrl_local_factor};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportKind {
    /// Product of signed local tame symbols; expected `1`.
    Reciprocity,
    /// Sum of traced local residues; expected `0`.
    Residues,
    /// Sum of local Gelfand-Fuchs cocycles; expected `0`.
    GelfandFuchs,
}

/// One place's contribution to a global identity.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaceEntry {
    pub place: String,
    pub deg: usize,
    pub v_f: i64,
    pub v_g: i64,
    pub value: FieldElem,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub kind: ReportKind,
    pub field: Field,
    pub places: Vec<PlaceEntry>,
    pub global: FieldElem,
    pub verified: bool,
}

impl VerificationReport {
    pub fn expected(&self) -> FieldElem {
        use crate::algebra::Ring;
        match self.kind {
            ReportKind::Reciprocity => self.field.one(),
            _ => self.field.zero(),
        }
    }
}

#[cfg(test)]
mod tests;
