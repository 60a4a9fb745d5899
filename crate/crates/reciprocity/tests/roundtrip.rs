use proptest::prelude::*;
use rand::Rng;
use reciprocity::parse::parse_in;
use reciprocity::spec::{parse_field, parse_ring};
use reciprocity::targets::{Functions, Series};
use reciprocity_core::random::{artinian_element, factored_rational, laurent_poly, rational_function, rng_from_seed};
use reciprocity_core::{Field, LaurentSeries};

fn fields() -> Vec<Field> {
    ["Q", "F5", "F9:u^2+1", "F8:t^3+t+1"].iter().map(|s| parse_field(s).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn rational_functions_round_trip(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for k in fields() {
            let f = match k.characteristic() {
                0 => factored_rational(&mut rng),
                _ => rational_function(&k, &mut rng),
            };
            let text = f.to_string();
            let back = parse_in(&Functions::new(&k), &text).unwrap();
            prop_assert_eq!(back, f, "{}", text);
        }
    }

    #[test]
    fn series_round_trip(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for k in fields() {
            let low = rng.gen_range(-4..=2);
            let mut s = laurent_poly(&k, low, low + rng.gen_range(0..=5), &mut rng);
            if rng.gen_bool(0.4) {
                s = s.truncate(low + rng.gen_range(0..=7));
            }
            let text = s.to_string();
            let back = parse_in(&Series::over_field(&k, 32), &text).unwrap();
            prop_assert_eq!(back, s, "{}", text);
        }
    }

    #[test]
    fn artinian_series_round_trip(seed: u64) {
        let mut rng = rng_from_seed(seed);
        for spec in ["Q[e1,e2]/(e1^2,e2^2)", "F5[a,b]/(a^3,b^2)", "F9:u^2+1[e]/(e^3)"] {
            let r = parse_ring(spec).unwrap();
            prop_assert_eq!(parse_ring(&r.to_string()).unwrap().to_string(), r.to_string());
            let terms: Vec<(i64, _)> = (-2..=2).map(|e| (e, artinian_element(&r, rng.gen_bool(0.5), &mut rng))).collect();
            let s = LaurentSeries::from_terms(&r, &terms);
            let text = s.to_string();
            let back = parse_in(&Series::over_algebra(&r, 32), &text).unwrap();
            prop_assert_eq!(back, s, "{}", text);
        }
    }
}
