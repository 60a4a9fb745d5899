use alloc::string::String;
use alloc::vec::Vec;

use super::RationalFunction;
use crate::algebra::{Field, Poly, PolyRing, ResidueRing};
use crate::Result;

/// A closed point of the projective line over `k`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    /// The zero set of a monic irreducible polynomial.
    Finite(Poly),
    Infinity,
}

impl Place {
    /// The place `x = a`.
    pub fn linear(field: &Field, a: &crate::FieldElem) -> Self {
        Place::Finite(Poly::linear(field, a))
    }

    pub fn degree(&self) -> usize {
        match self {
            Place::Finite(p) => p.deg() as usize,
            Place::Infinity => 1,
        }
    }

    /// `k[x]/(p)`; `None` at infinity, whose residue field is `k`.
    pub fn residue_ring(&self, field: &Field) -> Option<ResidueRing> {
        match self {
            Place::Finite(p) => Some(ResidueRing::new(field, p).unwrap()),
            Place::Infinity => None,
        }
    }

    /// The root `a` of a degree-one finite place `x - a`.
    pub fn rational_point(&self, field: &Field) -> Option<crate::FieldElem> {
        use crate::algebra::Ring;
        match self {
            Place::Finite(p) if p.deg() == 1 => Some(field.neg(&p.coeff(field, 0))),
            _ => None,
        }
    }

    pub fn name(&self, field: &Field) -> String {
        match self {
            Place::Finite(p) => alloc::format!("({})", p.to_string_in(field, "x")),
            Place::Infinity => String::from("inf"),
        }
    }

    /// `v_P(f)`.
    pub fn valuation(&self, f: &RationalFunction) -> i64 {
        match self {
            Place::Infinity => f.valuation_at_infinity(),
            Place::Finite(p) => {
                let ring = PolyRing::new(f.field());
                ring.strip_factor(f.numerator(), p).0 as i64 - ring.strip_factor(f.denominator(), p).0 as i64
            }
        }
    }
}

/// A finite formal sum of places.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Divisor {
    entries: Vec<(Place, i64)>,
}

impl Divisor {
    pub fn new() -> Self {
        Divisor { entries: Vec::new() }
    }

    pub fn add_place(&mut self, place: Place, m: i64) {
        if let Some(e) = self.entries.iter_mut().find(|e| e.0 == place) {
            e.1 += m;
        } else {
            self.entries.push((place, m));
        }
        self.entries.retain(|e| e.1 != 0);
    }

    pub fn multiplicity(&self, place: &Place) -> i64 {
        self.entries.iter().find(|e| e.0 == *place).map_or(0, |e| e.1)
    }

    pub fn entries(&self) -> &[(Place, i64)] {
        &self.entries
    }

    pub fn degree(&self) -> i64 {
        self.entries.iter().map(|(p, m)| m * p.degree() as i64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_string_in(&self, field: &Field) -> String {
        if self.entries.is_empty() {
            return String::from("0");
        }
        let parts: Vec<String> = self.entries.iter().map(|(p, m)| alloc::format!("{m}*{}", p.name(field))).collect();
        parts.join(" + ")
    }
}

/// `div(f)`, with the multiplicity at infinity `deg(den) - deg(num)`.
pub fn divisor_of(f: &RationalFunction) -> Result<Divisor> {
    let fac = f.factored()?;
    let mut d = Divisor::new();
    for pf in fac.factors {
        d.add_place(Place::Finite(pf.poly), pf.exponent);
    }
    d.add_place(Place::Infinity, f.valuation_at_infinity());
    Ok(d)
}

/// Places where `f` or `g` has a zero or pole, followed by infinity.
pub fn relevant_places(f: &RationalFunction, g: &RationalFunction) -> Result<Vec<Place>> {
    let mut out: Vec<Place> = Vec::new();
    for h in [f, g] {
        for pf in h.factored()?.factors {
            let p = Place::Finite(pf.poly);
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort_by(|a, b| (a.degree(), a).cmp(&(b.degree(), b)));
    out.push(Place::Infinity);
    Ok(out)
}
