use alloc::vec::Vec;
use core::fmt;

use super::{Field, FieldElem, FiniteAlgebra, Poly, PolyRing, Ring};
use crate::{Error, Result};

/// `k[x]/(m)` for a monic `m` of positive degree; the residue field of a
/// closed point of the affine line when `m` is irreducible.
#[derive(Clone, PartialEq, Debug)]
pub struct ResidueRing {
    ring: PolyRing,
    modulus: Poly,
}

impl ResidueRing {
    pub fn new(base: &Field, modulus: &Poly) -> Result<Self> {
        let ring = PolyRing::new(base);
        if modulus.deg() < 1 {
            return Err(Error::InvalidInput("residue ring modulus must have positive degree".into()));
        }
        let modulus = ring.monic(modulus);
        Ok(ResidueRing { ring, modulus })
    }

    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn base(&self) -> &Field {
        &self.ring.field
    }

    pub fn reduce(&self, a: &Poly) -> Poly {
        self.ring.rem(a, &self.modulus).unwrap()
    }
}

impl Ring for ResidueRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn one(&self) -> Poly {
        self.reduce(&self.ring.one())
    }

    fn from_int(&self, n: i64) -> Poly {
        self.reduce(&self.ring.from_int(n))
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.ring.add(a, b)
    }

    fn neg(&self, a: &Poly) -> Poly {
        self.ring.neg(a)
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.ring.mulmod(a, b, &self.modulus)
    }

    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }

    fn inv(&self, a: &Poly) -> Option<Poly> {
        self.ring.invmod(a, &self.modulus).ok()
    }

    fn write_elem(&self, a: &Poly, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&a.to_string_in(&self.ring.field, "x"))
    }
}

impl FiniteAlgebra for ResidueRing {
    fn base_field(&self) -> Field {
        self.ring.field.clone()
    }

    fn dimension(&self) -> usize {
        self.modulus.deg() as usize
    }

    fn coordinates(&self, a: &Poly) -> Vec<FieldElem> {
        (0..self.dimension()).map(|i| a.coeff(&self.ring.field, i)).collect()
    }

    fn from_coordinates(&self, coords: &[FieldElem]) -> Poly {
        Poly::new(&self.ring.field, coords.to_vec())
    }

    fn embed(&self, c: &FieldElem) -> Poly {
        Poly::constant(&self.ring.field, c.clone())
    }
}
