//! Seeded random inputs for sweeps and property tests.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{poly_factor, Artinian, ArtinianElem, Field, FieldElem, FieldKind, FiniteAlgebra, Irreducibility, Poly, PolyRing, Ring};
use crate::curve::RationalFunction;
use crate::laurent::LaurentSeries;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform over a finite field; small numerators and denominators over `Q`.
pub fn field_element<G: Rng>(k: &Field, rng: &mut G) -> FieldElem {
    match k.kind() {
        FieldKind::Rationals => {
            let n: i64 = rng.gen_range(-9..=9);
            let d: i64 = rng.gen_range(1..=4);
            FieldElem::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
        }
        FieldKind::Prime(p) => FieldElem::Mod(rng.gen_range(0..*p)),
        FieldKind::Extension { p, modulus, .. } => {
            let d = modulus.len() - 1;
            let coords: Vec<FieldElem> = (0..d).map(|_| FieldElem::Mod(rng.gen_range(0..*p))).collect();
            k.from_coordinates(&coords)
        }
    }
}

pub fn nonzero_field_element<G: Rng>(k: &Field, rng: &mut G) -> FieldElem {
    loop {
        let c = field_element(k, rng);
        if !k.is_zero(&c) {
            return c;
        }
    }
}

/// Polynomial of degree at most `deg`.
pub fn poly<G: Rng>(k: &Field, deg: usize, rng: &mut G) -> Poly {
    Poly::new(k, (0..=deg).map(|_| field_element(k, rng)).collect())
}

/// Monic polynomial of degree exactly `deg`.
pub fn monic_poly<G: Rng>(k: &Field, deg: usize, rng: &mut G) -> Poly {
    let mut c: Vec<FieldElem> = (0..deg).map(|_| field_element(k, rng)).collect();
    c.push(k.one());
    Poly::new(k, c)
}

/// Laurent polynomial supported in `[low, high]`.
pub fn laurent_poly<G: Rng>(k: &Field, low: i64, high: i64, rng: &mut G) -> LaurentSeries<Field> {
    let coeffs = (low..=high).map(|_| field_element(k, rng)).collect();
    LaurentSeries::polynomial(k, low, coeffs)
}

/// Random element of the maximal ideal when `nilpotent`, else a unit.
pub fn artinian_element<G: Rng>(r: &Artinian, nilpotent: bool, rng: &mut G) -> ArtinianElem {
    let k = r.base();
    let mut coords: Vec<FieldElem> = (0..r.dimension()).map(|_| field_element(k, rng)).collect();
    coords[0] = if nilpotent { k.zero() } else { nonzero_field_element(k, rng) };
    r.from_coordinates(&coords)
}

/// Random element of `G_1(R)` with negative part down to `-pole` and
/// positive part up to `deg`.
pub fn g1_element<G: Rng>(r: &Artinian, pole: i64, deg: i64, rng: &mut G) -> LaurentSeries<Artinian> {
    let mut terms = Vec::new();
    for e in -pole..=deg {
        let c = artinian_element(r, true, rng);
        terms.push((e, if e == 0 { r.add(&r.one(), &c) } else { c }));
    }
    LaurentSeries::from_terms(r, &terms)
}

/// A random monic irreducible polynomial of degree `d`, by rejection.
pub fn irreducible_poly<G: Rng>(k: &Field, d: usize, rng: &mut G) -> Poly {
    loop {
        let p = monic_poly(k, d, rng);
        let fac = poly_factor(k, &p).unwrap();
        if fac.factors.len() == 1 && fac.factors[0].multiplicity == 1 {
            return p;
        }
    }
}

fn nonzero_poly<G: Rng>(k: &Field, deg: usize, rng: &mut G) -> Poly {
    loop {
        let p = poly(k, deg, rng);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random element of `k(x)` with numerator and denominator of degree at
/// most 5; more often than not one of them carries an irreducible factor of degree 2 or 3.
pub fn rational_function<G: Rng>(k: &Field, rng: &mut G) -> RationalFunction {
    let ring = PolyRing::new(k);
    let mut num = nonzero_poly(k, rng.gen_range(0..=3), rng);
    let mut den = monic_poly(k, rng.gen_range(0..=3), rng);
    if rng.gen_bool(0.6) {
        let d = rng.gen_range(2..=3);
        let p = irreducible_poly(k, d, rng);
        if rng.gen_bool(0.5) {
            num = ring.mul(&num, &p);
            if num.deg() > 5 {
                num = p;
            }
        } else {
            den = ring.mul(&den, &p);
            if den.deg() > 5 {
                den = p;
            }
        }
    }
    RationalFunction::new(k, &num, &den).unwrap()
}

/// Over the rationals: a product of declared linear and quadratic factors.
pub fn factored_rational<G: Rng>(rng: &mut G) -> RationalFunction {
    let q = Field::rationals();
    let quadratics: [&[i64]; 4] = [&[1, 0, 1], &[2, 0, 1], &[1, 1, 1], &[-3, 0, 1]];
    let mut factors: Vec<(Poly, i64)> = Vec::new();
    let (mut deg_num, mut deg_den) = (0, 0);
    for _ in 0..rng.gen_range(1..=4) {
        let p = if rng.gen_bool(0.6) {
            Poly::linear(&q, &q.rational(rng.gen_range(-6..=6), rng.gen_range(1..=3)).unwrap())
        } else {
            Poly::from_i64(&q, quadratics[rng.gen_range(0..quadratics.len())])
        };
        if factors.iter().any(|(f, _)| *f == p) {
            continue;
        }
        let e: i64 = if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=2);
        let d = p.deg() * e.abs();
        if e > 0 && deg_num + d <= 5 {
            deg_num += d;
            factors.push((p, e));
        } else if e < 0 && deg_den + d <= 5 {
            deg_den += d;
            factors.push((p, e));
        }
    }
    let leading = nonzero_field_element(&q, rng);
    RationalFunction::from_factors(&q, &leading, &factors, Irreducibility::Declared).unwrap()
}
