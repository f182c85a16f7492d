use gammaval::hypergeometric::{beta_value, gauss_numeric, gauss_value, HypergeometricSpec};
use gammaval::numeric::quadrature::hyperelliptic_h;
use gammaval::numeric::{eval_monomial, PrecisionConfig};
use gammaval::{q, Error, Rational};
use proptest::prelude::*;

fn spec(a: Rational, b: Rational, c: Rational) -> HypergeometricSpec {
    HypergeometricSpec::new(a, b, c)
}

fn admissible() -> impl Strategy<Value = HypergeometricSpec> {
    (-120i64..240, -120i64..240, 30i64..240).prop_map(|(ka, kb, ks)| {
        let a = q(ka, 120);
        let b = q(kb, 120);
        let c = &(&a + &b) + &q(ks, 120);
        spec(a, b, c)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn closed_form_matches_series(sp in admissible()) {
        let cfg = PrecisionConfig::new(20);
        match gauss_value(&sp) {
            Ok(m) => {
                let exact = eval_monomial(&m, &cfg).unwrap();
                let series = gauss_numeric(&sp, &cfg).unwrap();
                prop_assert!(series.max_rel_deviation(&exact) < 1e-12, "{:?}", sp);
            }
            Err(Error::Pole(_)) | Err(Error::NegativeValue(_)) => {}
            Err(e) => prop_assert!(false, "{:?}: {}", sp, e),
        }
    }

    #[test]
    fn gauss_is_symmetric(sp in admissible()) {
        let swapped = spec(sp.b.clone(), sp.a.clone(), sp.c.clone());
        prop_assert_eq!(gauss_value(&sp).ok(), gauss_value(&swapped).ok());
    }

    #[test]
    fn beta_is_symmetric(ka in 1i64..240, kb in 1i64..240) {
        let (a, b) = (q(ka, 120), q(kb, 120));
        prop_assert_eq!(beta_value(&a, &b).unwrap(), beta_value(&b, &a).unwrap());
    }
}

#[test]
fn printed_examples_match_series() {
    let cfg = PrecisionConfig::new(50);
    for (a, b, c) in [
        (q(1, 4), q(-1, 12), q(2, 3)),
        (q(5, 24), q(-1, 24), q(2, 3)),
        (q(3, 10), q(-1, 30), q(3, 5)),
        (q(1, 2), q(1, 2), q(2, 1)),
    ] {
        let sp = spec(a, b, c);
        let exact = eval_monomial(&gauss_value(&sp).unwrap(), &cfg).unwrap();
        let series = gauss_numeric(&sp, &cfg).unwrap();
        assert!(series.max_rel_deviation(&exact) < 1e-40, "{sp:?}");
    }
}

#[test]
fn beta_values_match_hyperelliptic_integrals() {
    let cfg = PrecisionConfig::new(40);
    let b1 = eval_monomial(&beta_value(&q(1, 5), &q(1, 2)).unwrap(), &cfg).unwrap();
    let h1 = hyperelliptic_h(1, &cfg).unwrap().value.mul_rational(&q(5, 1));
    assert!(b1.max_rel_deviation(&h1) < 1e-30);
    let b2 = eval_monomial(&beta_value(&q(2, 5), &q(1, 2)).unwrap(), &cfg).unwrap();
    let h2 = hyperelliptic_h(2, &cfg).unwrap().value.mul_rational(&q(5, 1));
    assert!(b2.max_rel_deviation(&h2) < 1e-30);
}
