use gammaval::atoms::{ConstantAtom, GammaSymbol};
use gammaval::numeric::eval::eval_monomial_bits;
use gammaval::{canonicalize, q, Factor, Monomial, Rational};
use proptest::prelude::*;

fn exponent() -> impl Strategy<Value = Rational> {
    (-6i64..=6, prop::sample::select(vec![1i64, 2, 3, 4, 6, 8, 12])).prop_map(|(k, d)| q(k, d))
}

fn factor() -> impl Strategy<Value = (Factor, Rational)> {
    let atoms = prop::sample::select(ConstantAtom::ALL.to_vec()).prop_map(Factor::Atom);
    let gammas = prop::sample::select(GammaSymbol::all()).prop_map(Factor::Gamma);
    prop_oneof![
        (atoms, exponent()),
        (Just(Factor::Pi), exponent()),
        (gammas, exponent()),
        // rationals keep integer exponents so no numeric tail appears
        ((1i64..=14, 1i64..=14).prop_map(|(a, b)| Factor::Rational(q(a, b))), -3i64..=3)
            .prop_map(|(f, k)| (f, q(k, 1))),
    ]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(factor(), 0..6).prop_map(|raw| canonicalize(&raw).unwrap())
}

/// The same monomial written back as raw factors.
fn raw_of(m: &Monomial) -> Vec<(Factor, Rational)> {
    let mut raw = vec![(Factor::Rational(m.coefficient().clone()), Rational::one())];
    raw.push((Factor::Pi, m.pi_exponent().clone()));
    for (g, e) in m.generators() {
        raw.push((Factor::Atom(ConstantAtom::from_name(g.name()).unwrap()), e.clone()));
    }
    for (s, e) in m.gammas() {
        raw.push((Factor::Gamma(s.clone()), e.clone()));
    }
    raw
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn canonicalization_is_idempotent(m in monomial()) {
        prop_assert_eq!(canonicalize(&raw_of(&m)).unwrap(), m.clone());
        prop_assert_eq!(Monomial::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn group_laws(a in monomial(), b in monomial(), c in monomial()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.mul(&a.inv()).is_unit());
        prop_assert_eq!(a.mul(&Monomial::unit()), a.clone());
        prop_assert_eq!(a.div(&b).mul(&b), a);
    }

    #[test]
    fn power_laws(a in monomial(), b in monomial(), e in exponent(), f in exponent()) {
        // drop the rational coefficient so fractional powers stay exact
        let strip = |m: &Monomial| m.div(&Monomial::rational(m.coefficient()).unwrap());
        let (a, b) = (strip(&a), strip(&b));
        prop_assert_eq!(a.pow(&e).pow(&f), a.pow(&(&e * &f)));
        prop_assert_eq!(a.mul(&b).pow(&e), a.pow(&e).mul(&b.pow(&e)));
        prop_assert_eq!(a.pow(&e).mul(&a.pow(&f)), a.pow(&(&e + &f)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn canonical_form_preserves_value(raw in prop::collection::vec(factor(), 1..5)) {
        let m = canonicalize(&raw).unwrap();
        let mut direct = gammaval::numeric::BigBall::one(300);
        for (f, e) in &raw {
            let single = canonicalize(&[(f.clone(), Rational::one())]).unwrap();
            let v = eval_monomial_bits(&single, 300).unwrap().pow_rational(e).unwrap();
            direct = direct.mul(&v);
        }
        let v = eval_monomial_bits(&m, 300).unwrap();
        prop_assert!(v.max_rel_deviation(&direct) < 1e-70);
    }
}
