#![allow(dead_code)]

use reciprocity_core::{Field, FieldElem, Poly};

pub use reciprocity_core::random::{factored_rational, rational_function};

pub fn small_prime_fields() -> Vec<Field> {
    vec![Field::prime(5).unwrap(), Field::prime(7).unwrap()]
}

/// Converts a polynomial over a prime field to `u64` coefficients.
pub fn residues_u64(k: &Field, p: &Poly) -> Vec<u64> {
    p.coeffs()
        .iter()
        .map(|c| match c {
            FieldElem::Mod(v) => *v,
            _ => panic!("not over a prime field: {}", k),
        })
        .collect()
}
