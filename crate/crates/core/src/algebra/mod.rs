//! Exact coefficient arithmetic: base fields, finite extensions, truncated
//! Artinian algebras, residue rings `k[x]/(p)`, polynomials and matrices.

mod artinian;
mod factor;
mod field;
mod matrix;
mod norm;
mod poly;
mod residue_ring;
mod ring;

pub use artinian::{Artinian, ArtinianElem};
pub use factor::{poly_factor, poly_factor_with_rng, roots_by_search, Factor, Factorization, Irreducibility};
pub use field::{is_prime, Field, FieldElem, FieldKind};
pub use matrix::Matrix;
pub use norm::{algebra_norm, algebra_trace, norm_det_compat, relative_norm};
pub use poly::{Poly, PolyRing};
pub use residue_ring::ResidueRing;
pub use ring::{FiniteAlgebra, Ring, Value};
