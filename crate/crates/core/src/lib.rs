//! Exact local symbols on formal Laurent series and their global reciprocity laws
//! on the projective line.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure exact
//! arithmetic: base fields (the rationals, prime fields, finite extensions),
//! truncated Artinian algebras, truncated Laurent series, the tame and
//! Contou-Carrère symbols, residues computed three independent ways, the
//! determinant 2-cocycle on finite windows, and the global verifiers for Weil
//! reciprocity and the residue theorem.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod cocycle;
pub mod curve;
mod error;
pub mod laurent;
pub mod random;
pub mod symbols;

pub use algebra::{
    Artinian, ArtinianElem, Field, FieldElem, FiniteAlgebra, Matrix, Poly, PolyRing, ResidueRing,
    Ring, Value,
};
pub use error::{Error, Result};
pub use laurent::LaurentSeries;

/// Seed used by every randomized algorithm when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 0x005e_ed0f_1a7e;
