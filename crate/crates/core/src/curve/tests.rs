use alloc::vec;

use super::*;
use crate::algebra::{Irreducibility, Matrix, Poly, Ring};
use crate::laurent::LaurentSeries;

fn poly(k: &Field, c: &[i64]) -> Poly {
    Poly::from_i64(k, c)
}

fn rf(k: &Field, n: &[i64], d: &[i64]) -> RationalFunction {
    RationalFunction::new(k, &poly(k, n), &poly(k, d)).unwrap()
}

#[test]
fn relevant_places_examples() {
    let q = Field::rationals();
    let x = rf(&q, &[0, 1], &[1]);
    let one_minus_x = rf(&q, &[1, -1], &[1]);
    let places = relevant_places(&x, &one_minus_x).unwrap();
    assert_eq!(places, vec![Place::Finite(poly(&q, &[-1, 1])), Place::Finite(poly(&q, &[0, 1])), Place::Infinity]);

    let f3 = Field::prime(3).unwrap();
    let f = rf(&f3, &[1, 0, 1], &[1]);
    let places = relevant_places(&f, &f).unwrap();
    assert_eq!(places, vec![Place::Finite(poly(&f3, &[1, 0, 1])), Place::Infinity]);
    assert_eq!(places[0].degree(), 2);

    let one = rf(&q, &[1], &[1]);
    assert_eq!(relevant_places(&one, &one).unwrap(), vec![Place::Infinity]);
}

#[test]
fn local_expansions() {
    let q = Field::rationals();
    let at_zero = Place::Finite(poly(&q, &[0, 1]));
    let inv_x = rf(&q, &[1], &[0, 1]);
    assert_eq!(local_expand(&inv_x, &at_zero, 8).unwrap(), LaurentSeries::monomial(&q, q.one(), -1));
    let x = rf(&q, &[0, 1], &[1]);
    let e = local_expand(&x, &Place::Infinity, 8).unwrap();
    assert!(e.agrees_with(&LaurentSeries::monomial(&q, q.one(), -1)));
    let geo = rf(&q, &[1], &[1, -1]);
    let e = local_expand(&geo, &at_zero, 10).unwrap();
    assert_eq!(e.prec(), Some(10));
    for i in 0..10 {
        assert_eq!(e.coeff(i).unwrap(), q.one());
    }
}

#[test]
fn divisors() {
    let q = Field::rationals();
    let d = divisor_of(&rf(&q, &[0, 1], &[1])).unwrap();
    assert_eq!(d.multiplicity(&Place::Finite(poly(&q, &[0, 1]))), 1);
    assert_eq!(d.multiplicity(&Place::Infinity), -1);
    assert!(divisor_of(&rf(&q, &[5], &[1])).unwrap().is_zero());
    let f3 = Field::prime(3).unwrap();
    let d = divisor_of(&rf(&f3, &[1, 0, 1], &[0, 1])).unwrap();
    assert_eq!(d.multiplicity(&Place::Finite(poly(&f3, &[1, 0, 1]))), 1);
    assert_eq!(d.multiplicity(&Place::Finite(poly(&f3, &[0, 1]))), -1);
    assert_eq!(d.multiplicity(&Place::Infinity), -1);
    assert_eq!(d.degree(), 0);
}

#[test]
fn wrl_local_factors() {
    let q = Field::rationals();
    let x = rf(&q, &[0, 1], &[1]);
    let g = rf(&q, &[1, -1], &[1]);
    let at_zero = wrl_local_factor(&x, &g, &Place::Finite(poly(&q, &[0, 1]))).unwrap();
    assert_eq!((at_zero.v_f, at_zero.v_g, at_zero.value.clone()), (1, 0, q.one()));
    let at_inf = wrl_local_factor(&x, &g, &Place::Infinity).unwrap();
    assert_eq!((at_inf.v_f, at_inf.v_g, at_inf.value.clone()), (-1, -1, q.one()));

    let f3 = Field::prime(3).unwrap();
    let h = rf(&f3, &[1, 0, 1], &[1]);
    let e = wrl_local_factor(&h, &h, &Place::Finite(poly(&f3, &[1, 0, 1]))).unwrap();
    assert_eq!(e.value, f3.one());
}

#[test]
fn wrl_examples() {
    let q = Field::rationals();
    let x = rf(&q, &[0, 1], &[1]);
    let g = rf(&q, &[1, -1], &[1]);
    let r = verify_wrl(&x, &g).unwrap();
    assert!(r.verified);
    assert!(r.places.iter().all(|e| q.is_one(&e.value)));
    assert!(verify_wrl(&x, &x).unwrap().verified);
    let c = rf(&q, &[7], &[1]);
    let f = rf(&q, &[3, 0, 1], &[-2, 1]);
    assert!(verify_wrl(&f, &c).unwrap().verified);
}

#[test]
fn trace_residues() {
    let q = Field::rationals();
    let inv_x = rf(&q, &[1], &[0, 1]);
    assert_eq!(trace_residue_at_place(&inv_x, &Place::Finite(poly(&q, &[0, 1]))).unwrap(), q.one());
    assert_eq!(trace_residue_at_place(&inv_x, &Place::Infinity).unwrap(), q.from_int(-1));
    let f3 = Field::prime(3).unwrap();
    let h = rf(&f3, &[1], &[1, 0, 1]);
    assert_eq!(trace_residue_at_place(&h, &Place::Finite(poly(&f3, &[1, 0, 1]))).unwrap(), f3.zero());
    // x/(x^2+1): both conjugate residues are 1/2, so the trace is 1
    let h = rf(&f3, &[0, 1], &[1, 0, 1]);
    assert_eq!(trace_residue_at_place(&h, &Place::Finite(poly(&f3, &[1, 0, 1]))).unwrap(), f3.one());
}

#[test]
fn residue_theorem_examples() {
    let q = Field::rationals();
    let r = verify_residue_theorem(&rf(&q, &[1], &[0, 1]), &rf(&q, &[0, 1], &[1])).unwrap();
    assert!(r.verified);
    let vals: vec::Vec<_> = r.places.iter().map(|e| e.value.clone()).collect();
    assert_eq!(vals, vec![q.one(), q.from_int(-1)]);
    let r = verify_residue_theorem(&rf(&q, &[1, 2, 3], &[1]), &rf(&q, &[0, 0, 0, 1], &[1])).unwrap();
    assert!(r.verified && q.is_zero(&r.global));
    let f3 = Field::prime(3).unwrap();
    assert!(verify_residue_theorem(&rf(&f3, &[1], &[1, 0, 1]), &rf(&f3, &[0, 1], &[1])).unwrap().verified);
}

#[test]
fn sigma_perp_examples() {
    let q = Field::rationals();
    let f = rf(&q, &[1, 1], &[0, 0, 1]);
    let tests = [rf(&q, &[0, 1], &[1]), rf(&q, &[1], &[1, 1]), rf(&q, &[0, 0, 1], &[3, 1])];
    assert!(sigma_perp_forward(&AdeleVector { default: f.clone(), perturbations: vec![] }, &tests).unwrap());

    let at_two = Place::Finite(poly(&q, &[-2, 1]));
    let constant = AdeleVector { default: f.clone(), perturbations: vec![(at_two.clone(), LaurentSeries::constant(&q, q.from_int(5)))] };
    assert!(sigma_perp_forward(&constant, &tests).unwrap());

    let pole = AdeleVector { default: f, perturbations: vec![(at_two, LaurentSeries::monomial(&q, q.one(), -1))] };
    let uniformizer = [rf(&q, &[-2, 1], &[1])];
    assert_eq!(sigma_perp_pairings(&pole, &uniformizer).unwrap(), vec![q.one()]);
    assert!(!sigma_perp_forward(&pole, &uniformizer).unwrap());
}

#[test]
fn gf_global_examples() {
    let q = Field::rationals();
    let id = Matrix::identity(&q, 2);
    let r = verify_gf_global(&id, &id, &rf(&q, &[1], &[0, 1]), &rf(&q, &[0, 1], &[1])).unwrap();
    assert!(r.verified);
    assert_eq!(r.places[0].value, q.from_int(2));
    let s = Matrix::from_rows(&q, vec![vec![q.from_int(1), q.from_int(2)], vec![q.from_int(-1), q.from_int(3)]]).unwrap();
    let t = Matrix::from_rows(&q, vec![vec![q.from_int(0), q.from_int(5)], vec![q.from_int(1), q.from_int(-4)]]).unwrap();
    assert!(verify_gf_global(&s, &t, &rf(&q, &[1], &[-1, 1]), &rf(&q, &[0, 0, 1], &[1])).unwrap().verified);
}

#[test]
fn unsplit_factors_need_declaration() {
    let q = Field::rationals();
    // (x^2+1)(x^2+2) has no rational roots
    let quartic = poly(&q, &[2, 0, 3, 0, 1]);
    let f = RationalFunction::new(&q, &quartic, &poly(&q, &[0, 1])).unwrap();
    assert!(matches!(verify_wrl(&f, &f), Err(crate::Error::Unsplit(_))));
    let declared = RationalFunction::from_factors(&q, &q.one(), &[(poly(&q, &[1, 0, 1]), 1), (poly(&q, &[2, 0, 1]), 1), (poly(&q, &[0, 1]), -1)], Irreducibility::Declared).unwrap();
    assert_eq!(declared, f);
    assert!(verify_wrl(&declared, &rf(&q, &[1, 1], &[1])).unwrap().verified);
    assert!(verify_residue_theorem(&declared, &rf(&q, &[1], &[1, 0, 1])).unwrap().verified);
}

#[test]
fn local_data_mode() {
    let q = Field::rationals();
    let x = rf(&q, &[0, 1], &[1]);
    let g = rf(&q, &[1, -1], &[1]);
    let data: vec::Vec<LocalDatum> = relevant_places(&x, &g)
        .unwrap()
        .iter()
        .map(|p| LocalDatum { name: p.name(&q), residue_field: q.clone(), f: local_expand(&x, p, 8).unwrap(), g: local_expand(&g, p, 8).unwrap() })
        .collect();
    assert!(verify_wrl_local(&q, &data).unwrap().verified);
    assert!(verify_residues_local(&q, &data).unwrap().verified);
}
