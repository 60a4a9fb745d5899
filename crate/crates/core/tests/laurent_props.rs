use proptest::prelude::*;
use rand::Rng;
use reciprocity_core::random::{g1_element, laurent_poly, nonzero_field_element, rng_from_seed};
use reciprocity_core::{Artinian, Field, LaurentSeries};

fn fields() -> Vec<Field> {
    vec![Field::rationals(), Field::prime(5).unwrap(), Field::prime(7).unwrap(), Field::extension(3, &[1, 0, 1]).unwrap()]
}

fn random_unit<G: Rng>(k: &Field, rng: &mut G) -> LaurentSeries<Field> {
    let low = rng.gen_range(-4..=4);
    let mut s = laurent_poly(k, low, low + rng.gen_range(0..=6), rng);
    s = s.add(&LaurentSeries::monomial(k, nonzero_field_element(k, rng), low - 1));
    if rng.gen_bool(0.5) {
        s = s.truncate(low + rng.gen_range(3..=12));
    }
    s
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn unit_factorization_round_trips_and_is_unique(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for k in fields() {
            let s = random_unit(&k, &mut rng);
            let fac = s.unit_factorize().unwrap();
            let back = fac.expand(&k);
            prop_assert!(back.agrees_with(&s), "{} vs {}", back, s);
            let again = back.truncate(fac.prec).unit_factorize().unwrap();
            prop_assert_eq!(&again.leading, &fac.leading);
            prop_assert_eq!(again.valuation, fac.valuation);
            prop_assert_eq!(&again.tail, &fac.tail);
        }
    }

    #[test]
    fn cc_factorization_round_trips(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for k in [Field::rationals(), Field::prime(5).unwrap()] {
            for r in [Artinian::new(&k, &[("e", 3)]).unwrap(), Artinian::new(&k, &[("e1", 2), ("e2", 2)]).unwrap()] {
                let f = g1_element(&r, rng.gen_range(0..=3), rng.gen_range(0..=3), &mut rng);
                let fac = f.cc_factorize().unwrap();
                let back = fac.expand(&r);
                prop_assert!(back.agrees_with(&f), "{} vs {}", back, f);
                prop_assert!(fac.neg.iter().all(|(i, _)| *i >= 1));
                prop_assert!(fac.pos.iter().all(|(_, a)| r.in_maximal_ideal(a)));
            }
        }
    }

    #[test]
    fn derivative_is_a_derivation(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for k in fields() {
            let f = random_unit(&k, &mut rng);
            let g = random_unit(&k, &mut rng);
            let lhs = f.mul(&g).derivative();
            let rhs = f.derivative().mul(&g).add(&f.mul(&g.derivative()));
            prop_assert!(lhs.agrees_with(&rhs));
        }
    }

    #[test]
    fn valuation_is_additive(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for k in fields() {
            let f = random_unit(&k, &mut rng);
            let g = random_unit(&k, &mut rng);
            prop_assert_eq!(f.mul(&g).valuation().unwrap(), f.valuation().unwrap() + g.valuation().unwrap());
            let inv = f.inv().unwrap();
            prop_assert!(f.mul(&inv).agrees_with(&LaurentSeries::one(&k)));
        }
    }
}
