use alloc::vec;

use super::*;
use crate::algebra::{Artinian, Matrix};

fn mono(k: &Field, c: i64, e: i64) -> LaurentSeries<Field> {
    LaurentSeries::monomial(k, k.from_int(c), e)
}

fn f9() -> Field {
    Field::extension(3, &[1, 0, 1]).unwrap()
}

#[test]
fn commutator_cases() {
    let q = Field::rationals();
    assert_eq!(local_commutator(&mono(&q, 3, 0), &mono(&q, 1, 2), &q).unwrap(), q.from_int(9));
    let one_plus_z = LaurentSeries::from_terms(&q, &[(0, q.one()), (1, q.one())]);
    assert_eq!(local_commutator(&one_plus_z, &mono(&q, 1, 3), &q).unwrap(), q.one());
    assert_eq!(local_commutator(&mono(&q, 1, 1), &mono(&q, 1, 1), &q).unwrap(), q.one());
}

#[test]
fn commutator_norm_over_extension() {
    let k = f9();
    let f3 = k.prime_field();
    let u = k.generator().unwrap();
    let s0 = k.add(&u, &k.one());
    let s = LaurentSeries::constant(&k, s0.clone());
    let t = LaurentSeries::monomial(&k, k.one(), 2);
    let norm = k.norm(&s0);
    assert_eq!(local_commutator(&s, &t, &f3).unwrap(), f3.mul(&norm, &norm));
}

#[test]
fn tame_symbol_examples() {
    let q = Field::rationals();
    assert_eq!(tame_symbol_signed(&mono(&q, 1, 1), &mono(&q, 1, 1), &q).unwrap(), q.from_int(-1));
    let f5 = Field::prime(5).unwrap();
    assert_eq!(tame_symbol_signed(&mono(&f5, 1, 1), &mono(&f5, 2, 1), &f5).unwrap(), f5.from_int(2));
    let k = f9();
    let f3 = k.prime_field();
    assert_eq!(tame_symbol_signed(&mono(&k, 1, 1), &mono(&k, 1, 1), &f3).unwrap(), f3.one());
}

#[test]
fn winding_numbers() {
    let q = Field::rationals();
    assert_eq!(winding_of_homothety(&mono(&q, 1, 1), &q).unwrap(), 1);
    let k = f9();
    assert_eq!(winding_of_homothety(&mono(&k, 1, 2), &k.prime_field()).unwrap(), 4);
    let one_plus_z = LaurentSeries::from_terms(&q, &[(0, q.one()), (1, q.one())]);
    assert_eq!(winding_of_homothety(&one_plus_z, &q).unwrap(), 0);
}

#[test]
fn cc_symbol_dual_number_example() {
    let q = Field::rationals();
    let r = Artinian::double_dual(&q);
    let (e1, e2) = (r.generator(0), r.generator(1));
    let f = LaurentSeries::from_terms(&r, &[(0, r.one()), (-1, e1.clone())]);
    let g = LaurentSeries::from_terms(&r, &[(0, r.one()), (1, e2.clone())]);
    let v = cc_symbol(&f, &g, &q).unwrap();
    assert_eq!(alloc::format!("{v}"), "1 + e1*e2");
}

#[test]
fn cc_symbol_case_one() {
    let q = Field::rationals();
    let r = Artinian::new(&q, &[("a", 2), ("b", 2)]).unwrap();
    let (a, b) = (r.generator(0), r.generator(1));
    let f = LaurentSeries::from_terms(&r, &[(0, r.one()), (1, r.neg(&a))]);
    let g = LaurentSeries::from_terms(&r, &[(0, r.one()), (-1, r.neg(&b))]);
    let v = cc_symbol(&f, &g, &q).unwrap();
    assert_eq!(v.value, r.sub(&r.one(), &r.mul(&a, &b)));
}

#[test]
fn lie_cocycle_examples() {
    let q = Field::rationals();
    assert_eq!(lie_cocycle_via_commutator(&mono(&q, 1, -1), &mono(&q, 1, 1), &q).unwrap(), q.one());
    let a = LaurentSeries::from_terms(&q, &[(-2, q.from_int(3)), (1, q.one())]);
    assert_eq!(lie_cocycle_via_commutator(&a, &a, &q).unwrap(), q.zero());
    assert_eq!(lie_cocycle_via_commutator(&mono(&q, 1, -2), &mono(&q, 1, 2), &q).unwrap(), q.from_int(2));
}

#[test]
fn residue_examples() {
    let q = Field::rationals();
    assert_eq!(residue_coefficient(&mono(&q, 1, -1), &mono(&q, 1, 1), &q).unwrap(), q.one());
    assert_eq!(residue_coefficient(&mono(&q, 1, 3), &mono(&q, 1, 1), &q).unwrap(), q.zero());
    let k = f9();
    let u = LaurentSeries::monomial(&k, k.generator().unwrap(), -1);
    assert_eq!(residue_coefficient(&u, &mono(&k, 1, 1), &k.prime_field()).unwrap(), k.prime_field().zero());
}

#[test]
fn tate_residue_examples() {
    let q = Field::rationals();
    assert_eq!(tate_residue(&mono(&q, 1, -1), &mono(&q, 1, 1), 4, &q).unwrap(), q.one());
    let f = LaurentSeries::from_terms(&q, &[(-2, q.from_int(3)), (1, q.one())]);
    assert_eq!(tate_residue(&f, &f, 6, &q).unwrap(), q.zero());
    assert_eq!(tate_residue(&mono(&q, 1, 0), &f, 6, &q).unwrap(), q.zero());
    assert!(matches!(tate_residue(&f, &f, 2, &q), Err(crate::Error::WindowTooSmall { .. })));
}

#[test]
fn gf_cocycle_examples() {
    let q = Field::rationals();
    let e = |i: usize, j: usize| Matrix::from_fn(&q, 2, 2, |a, b| if (a, b) == (i, j) { q.one() } else { q.zero() });
    let a = LoopAlgebraElement::pure_tensor(&e(0, 1), &mono(&q, 1, -1)).unwrap();
    let b = LoopAlgebraElement::pure_tensor(&e(1, 0), &mono(&q, 1, 1)).unwrap();
    assert_eq!(gf_cocycle_local(&a, &b, &q).unwrap(), q.one());
    assert_eq!(gf_cocycle_local(&a, &a, &q).unwrap(), q.zero());
    let id = LoopAlgebraElement::pure_tensor(&Matrix::identity(&q, 2), &mono(&q, 1, 0)).unwrap();
    let entries = vec![mono(&q, 2, -3), mono(&q, 1, 2), mono(&q, -1, -1), mono(&q, 5, 4)];
    let c = LoopAlgebraElement::from_entries(2, entries).unwrap();
    assert_eq!(gf_cocycle_local(&id, &c, &q).unwrap(), q.zero());
}
