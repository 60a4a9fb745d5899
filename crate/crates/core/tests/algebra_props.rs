use proptest::prelude::*;
use rand::Rng;
use reciprocity_core::algebra::{algebra_norm, algebra_trace, poly_factor, ResidueRing};
use reciprocity_core::random::{artinian_element, field_element, monic_poly, nonzero_field_element, poly, rng_from_seed};
use reciprocity_core::{Artinian, Field, FiniteAlgebra, PolyRing, Ring};

fn extensions() -> Vec<Field> {
    vec![
        Field::extension(2, &[1, 1, 1]).unwrap(),
        Field::extension(3, &[1, 0, 1]).unwrap(),
        Field::extension(2, &[1, 1, 0, 1]).unwrap(),
        Field::extension(5, &[2, 0, 1]).unwrap(),
        Field::extension(3, &[1, 2, 0, 1]).unwrap(),
    ]
}

fn check_norm_trace<A: FiniteAlgebra>(alg: &A, a: &A::Elem, b: &A::Elem, c: &reciprocity_core::FieldElem, over: &Field) {
    let nab = algebra_norm(alg, &alg.mul(a, b), over).unwrap();
    let prod = over.mul(&algebra_norm(alg, a, over).unwrap(), &algebra_norm(alg, b, over).unwrap());
    assert_eq!(nab, prod);
    let lin = alg.add(a, &alg.mul(&alg.embed(c), b));
    let expected = over.add(&algebra_trace(alg, a, over).unwrap(), &over.mul(c, &algebra_trace(alg, b, over).unwrap()));
    assert_eq!(algebra_trace(alg, &lin, over).unwrap(), expected);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn norm_multiplicative_trace_linear_in_fields(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for k in extensions() {
            let base = k.prime_field();
            let (a, b) = (field_element(&k, &mut rng), field_element(&k, &mut rng));
            let c = field_element(&base, &mut rng);
            check_norm_trace(&k, &a, &b, &c, &base);
        }
    }

    #[test]
    fn norm_multiplicative_in_artinian_and_residue_rings(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for k in [Field::rationals(), Field::prime(5).unwrap(), Field::extension(3, &[1, 0, 1]).unwrap()] {
            let r = Artinian::new(&k, &[("e1", 2), ("e2", 3)]).unwrap();
            let (a, b) = (artinian_element(&r, rng.gen_bool(0.3), &mut rng), artinian_element(&r, false, &mut rng));
            let c = field_element(&k, &mut rng);
            check_norm_trace(&r, &a, &b, &c, &k);

            let m = monic_poly(&k, rng.gen_range(1..=4), &mut rng);
            let q = ResidueRing::new(&k, &m).unwrap();
            let (a, b) = (q.reduce(&poly(&k, 5, &mut rng)), q.reduce(&poly(&k, 5, &mut rng)));
            check_norm_trace(&q, &a, &b, &c, &k);
        }
    }

    #[test]
    fn norm_matches_frobenius_power(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for k in extensions() {
            let base = k.prime_field();
            let p = k.characteristic();
            let exponent: u64 = (0..k.degree() as u32).map(|i| p.pow(i)).sum();
            let r = nonzero_field_element(&k, &mut rng);
            let frob = k.pow(&r, exponent);
            prop_assert_eq!(k.from_prime(&algebra_norm(&k, &r, &base).unwrap()), frob);
        }
    }

    #[test]
    fn factorization_round_trips_over_prime_fields(seed: u64, p in prop::sample::select(vec![2u64, 3, 5, 7, 13])) {
        let mut rng = rng_from_seed(seed);
        let k = Field::prime(p).unwrap();
        let ring = PolyRing::new(&k);
        // products of small pieces give repeated factors often
        let mut f = poly(&k, 0, &mut rng);
        if f.is_zero() {
            f = ring.one();
        }
        for _ in 0..rng.gen_range(1..=4) {
            f = ring.mul(&f, &monic_poly(&k, rng.gen_range(1..=3), &mut rng));
        }
        let fac = poly_factor(&k, &f).unwrap();
        prop_assert!(fac.is_complete());
        prop_assert_eq!(fac.expand(&k), f);
    }

    #[test]
    fn factorization_round_trips_over_rationals(seed: u64) {
        let mut rng = rng_from_seed(seed);
        let q = Field::rationals();
        let ring = PolyRing::new(&q);
        let mut f = ring.constant(nonzero_field_element(&q, &mut rng));
        for _ in 0..rng.gen_range(1..=4) {
            let piece = if rng.gen_bool(0.6) { monic_poly(&q, 1, &mut rng) } else { poly(&q, 2, &mut rng) };
            if !piece.is_zero() {
                f = ring.mul(&f, &piece);
            }
        }
        prop_assert_eq!(poly_factor(&q, &f).unwrap().expand(&q), f);
    }
}
