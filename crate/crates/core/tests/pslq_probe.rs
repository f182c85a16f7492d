use gammaval::numeric::pslq::{generator_independence, PslqOutcome};
use gammaval::numeric::PrecisionConfig;

#[test]
fn generators_and_pi_are_independent() {
    let out = generator_independence(&PrecisionConfig::new(200));
    assert!(matches!(out, PslqOutcome::NoRelationBelow(b) if b > 1e6 * 19f64.sqrt()), "{out:?}");
}
