use gammaval::numeric::eval::eval_monomial_bits;
use gammaval::numeric::gamma::gamma_bits;
use gammaval::relations::relation::FunctionalRelation;
use gammaval::relations::{
    euler_phi, extension_table, hardcoded_table, kubert_rank, naive_basis_dependent, reduce,
};
use gammaval::trig::circle::supported_denominator;
use gammaval::{q, Monomial, Rational};

fn grid() -> Vec<Rational> {
    let mut v: Vec<Rational> = [24i64, 60]
        .iter()
        .flat_map(|&n| (1..n).map(move |k| q(k, n)))
        .collect();
    v.sort();
    v.dedup();
    v
}

#[test]
fn kubert_ranks_match_totient() {
    for n in [3i64, 4, 5, 8, 12, 15, 20, 24, 30, 40, 60, 120] {
        assert_eq!(kubert_rank(n).unwrap() as u64, euler_phi(n as u64) / 2, "N = {n}");
    }
}

#[test]
fn naive_half_sets_are_dependent() {
    for n in [20, 24, 30, 60] {
        assert!(naive_basis_dependent(n).unwrap(), "N = {n}");
    }
}

#[test]
fn reflection_holds_for_every_point() {
    for x in grid() {
        if x > q(1, 2) {
            continue;
        }
        let r = FunctionalRelation::reflection(&x).unwrap();
        assert!(r.residual(reduce).unwrap().is_unit(), "{r}");
    }
}

#[test]
fn multiplication_holds_where_applicable() {
    let mut checked = 0;
    for x in grid() {
        for n in 2..=6u32 {
            let Ok(r) = FunctionalRelation::multiplication(n, &x) else { continue };
            if !r.lhs.keys().all(|a| supported_denominator(a.denom())) {
                continue;
            }
            assert!(r.residual(reduce).unwrap().is_unit(), "{r}");
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn table_matches_numeric_gamma() {
    for (x, m) in &hardcoded_table().entries {
        let v = eval_monomial_bits(m, 190).unwrap();
        let g = gamma_bits(x, 190).unwrap();
        assert!(v.max_rel_deviation(&g) < 1e-45, "Gamma({x})");
    }
}

#[test]
fn extension_matches_numeric_gamma() {
    for (x, m) in extension_table().unwrap() {
        let v = eval_monomial_bits(m, 220).unwrap();
        let g = gamma_bits(x, 220).unwrap();
        assert!(v.max_rel_deviation(&g) < 1e-45, "Gamma({x})");
    }
}

#[test]
fn extension_reduces_through_shift() {
    let m = reduce(&q(161, 120)).unwrap();
    let want = extension_table().unwrap()[&q(41, 120)].mul(&Monomial::rational(&q(41, 120)).unwrap());
    assert_eq!(m.gammas(), want.gammas());
    let v = eval_monomial_bits(&m, 220).unwrap();
    assert!(v.max_rel_deviation(&gamma_bits(&q(161, 120), 220).unwrap()) < 1e-45);
}
