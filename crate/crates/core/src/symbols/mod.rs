//! Local pairings on `k'((z))`: the commutator and tame symbols, the
//! Contou-Carrère symbol, residues, winding numbers and the Gelfand-Fuchs
//! cocycle.

mod contou_carrere;
mod loop_algebra;
mod residue;

use crate::algebra::{Field, FieldElem, FiniteAlgebra, Ring};
use crate::laurent::LaurentSeries;
use crate::Result;

pub use contou_carrere::{cc_symbol, lie_cocycle_via_commutator, CcValue};
pub use loop_algebra::{gf_cocycle_local, LoopAlgebraElement};
pub use residue::{residue_coefficient, tate_residue, tate_residue_unchecked};

/// `N_{k'/k}((S^{v(T)} / T^{v(S)})(0))`, without the sign.
pub fn local_commutator(s: &LaurentSeries<Field>, t: &LaurentSeries<Field>, base: &Field) -> Result<FieldElem> {
    let k = s.ring();
    let fs = s.unit_factorize()?;
    let ft = t.unit_factorize()?;
    let num = k.pow_signed(&fs.leading, ft.valuation)?;
    let den = k.pow_signed(&ft.leading, fs.valuation)?;
    k.norm_over(&k.div(&num, &den)?, base)
}

/// The tame symbol `(-1)^{v(f) v(g) [k':k]} N_{k'/k}((f^{v(g)}/g^{v(f)})(0))`.
pub fn tame_symbol_signed(f: &LaurentSeries<Field>, g: &LaurentSeries<Field>, base: &Field) -> Result<FieldElem> {
    let value = local_commutator(f, g, base)?;
    let d = f.ring().degree_over(base)? as i64;
    let e = f.valuation()? * g.valuation()? * d;
    Ok(if e % 2 == 0 { value } else { base.neg(&value) })
}

/// `v(g) [k':k]`.
pub fn winding_of_homothety(g: &LaurentSeries<Field>, base: &Field) -> Result<i64> {
    Ok(g.valuation()? * g.ring().degree_over(base)? as i64)
}

#[cfg(test)]
mod tests;
