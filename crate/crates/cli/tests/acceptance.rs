//! Acceptance run: one PASS/FAIL line per criterion.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gammaval::atoms::{ConstantAtom, GammaSymbol};
use gammaval::numeric::pslq::{generator_independence, PslqOutcome};
use gammaval::numeric::PrecisionConfig;
use gammaval::relations::relation::FunctionalRelation;
use gammaval::relations::reduce;
use gammaval::trig::circle::supported_denominator;
use gammaval::verify::{self, CheckOutcome};
use gammaval::{canonicalize, q, Factor, Monomial, Rational};
use gammaval_cli::expr::parse_expr;

const KUBERT_NS: [i64; 12] = [3, 4, 5, 8, 12, 15, 20, 24, 30, 40, 60, 120];

fn outcome(name: &str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome { name: name.into(), passed, max_deviation: None, detail }
}

fn random_exponent(rng: &mut ChaCha8Rng) -> Rational {
    let d = [1i64, 2, 3, 4, 6, 8, 12][rng.gen_range(0..7)];
    q(rng.gen_range(-6..=6), d)
}

fn random_monomial(rng: &mut ChaCha8Rng) -> Monomial {
    let gammas = GammaSymbol::all();
    let raw: Vec<(Factor, Rational)> = (0..rng.gen_range(0..6))
        .map(|_| match rng.gen_range(0..4) {
            0 => (Factor::Atom(ConstantAtom::ALL[rng.gen_range(0..ConstantAtom::ALL.len())]), random_exponent(rng)),
            1 => (Factor::Pi, random_exponent(rng)),
            2 => (Factor::Gamma(gammas[rng.gen_range(0..gammas.len())].clone()), random_exponent(rng)),
            _ => (Factor::Rational(q(rng.gen_range(1..=14), rng.gen_range(1..=14))), q(rng.gen_range(-3..=3), 1)),
        })
        .collect();
    canonicalize(&raw).expect("canonical form")
}

fn monomial_laws(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut bad = 0;
    for _ in 0..cases {
        let (a, b, c) = (random_monomial(rng), random_monomial(rng), random_monomial(rng));
        let mut raw = vec![(Factor::Rational(a.coefficient().clone()), Rational::one())];
        raw.push((Factor::Pi, a.pi_exponent().clone()));
        for (g, e) in a.generators() {
            raw.push((Factor::Atom(ConstantAtom::from_name(g.name()).unwrap()), e.clone()));
        }
        for (s, e) in a.gammas() {
            raw.push((Factor::Gamma(s.clone()), e.clone()));
        }
        let ok = canonicalize(&raw).ok().as_ref() == Some(&a)
            && Monomial::from_json(&a.to_json()).ok().as_ref() == Some(&a)
            && a.mul(&b).mul(&c) == a.mul(&b.mul(&c))
            && a.mul(&b) == b.mul(&a)
            && a.mul(&a.inv()).is_unit()
            && a.div(&b).mul(&b) == a;
        bad += usize::from(!ok);
    }
    outcome("monomial laws", bad == 0, format!("{cases} sampled cases, {bad} failures"))
}

/// Every point with denominator dividing 120 in (0, 1).
fn supported_points() -> Vec<Rational> {
    (1..120).map(|k| q(k, 120)).collect()
}

fn relation_identities() -> CheckOutcome {
    let mut checked = 0;
    let mut bad = Vec::new();
    for x in supported_points() {
        let mut relations = Vec::new();
        if x <= q(1, 2) {
            relations.push(FunctionalRelation::reflection(&x));
        }
        for n in 2..=6u32 {
            relations.push(FunctionalRelation::multiplication(n, &x));
        }
        for r in relations.into_iter().flatten() {
            if !r.lhs.keys().all(|a| supported_denominator(a.denom())) {
                continue;
            }
            checked += 1;
            if !r.residual(reduce).is_ok_and(|m| m.is_unit()) {
                bad.push(r.to_string());
            }
        }
    }
    let mut detail = format!("{checked} relations exact");
    if !bad.is_empty() {
        detail = format!("{checked} relations, failing: {}", bad.join("; "));
    }
    outcome("reflection and multiplication identities", bad.is_empty() && checked > 0, detail)
}

fn pslq_probe() -> CheckOutcome {
    match generator_independence(&PrecisionConfig::new(200)) {
        PslqOutcome::NoRelationBelow(b) => {
            outcome("generator independence probe", b > 1e6, format!("no relation of norm below {b:.3e}"))
        }
        other => outcome("generator independence probe", false, format!("{other:?}")),
    }
}

fn random_factor(rng: &mut ChaCha8Rng, depth: u32) -> String {
    let primary = match rng.gen_range(0..if depth == 0 { 3 } else { 4 }) {
        0 => format!("Gamma({}/{})", rng.gen_range(1..120), [24, 60, 120][rng.gen_range(0..3)]),
        1 => "pi".to_string(),
        2 => rng.gen_range(1..50).to_string(),
        _ => format!("({})", random_expr(rng, depth - 1)),
    };
    if rng.gen_bool(0.5) {
        format!("{primary}^({})", random_exponent(rng))
    } else {
        primary
    }
}

fn random_expr(rng: &mut ChaCha8Rng, depth: u32) -> String {
    let mut s = random_factor(rng, depth);
    for _ in 0..rng.gen_range(0..3) {
        let op = if rng.gen_bool(0.5) { "*" } else { "/" };
        s = format!("{s} {op} {}", random_factor(rng, depth));
    }
    s
}

fn parser_round_trips(rng: &mut ChaCha8Rng, cases: usize) -> CheckOutcome {
    let mut bad = Vec::new();
    for _ in 0..cases {
        let text = random_expr(rng, 2);
        let ok = match parse_expr(&text) {
            Ok(e) => parse_expr(&e.to_string()).ok().as_ref() == Some(&e),
            Err(_) => false,
        };
        if !ok {
            bad.push(text);
        }
    }
    let detail = if bad.is_empty() {
        format!("{cases} sampled expressions")
    } else {
        format!("failing: {}", bad.join("; "))
    };
    outcome("parser round trips", bad.is_empty(), detail)
}

fn main() {
    let mut results = Vec::new();

    let start = Instant::now();
    let mut sweep = verify::table_sweep(50);
    let elapsed = start.elapsed();
    sweep.passed &= elapsed < Duration::from_secs(30);
    sweep.detail.push_str(&format!(", swept in under {}s", elapsed.as_secs() + 1));
    results.push(sweep);

    results.push(verify::derivation_oracle());
    results.push(verify::kubert_ranks(&KUBERT_NS));
    let lemmas = verify::lemma_checks(100);
    results.push(lemmas[0].clone());
    results.push(lemmas[1].clone());
    results.push(verify::hypergeometric_examples(50));
    results.push(verify::elliptic(50));
    results.push(verify::hyperelliptic(40));
    results.push(verify::extension_sweep(60));

    let mut rng = ChaCha8Rng::seed_from_u64(0x6a6d);
    let suites = [
        monomial_laws(&mut rng, 2000),
        relation_identities(),
        pslq_probe(),
        parser_round_trips(&mut rng, 2000),
    ];
    let suite_ok = suites.iter().all(|c| c.passed);
    let detail = suites.iter().map(CheckOutcome::line).collect::<Vec<_>>().join("; ");
    results.push(outcome("property suites", suite_ok, detail));

    for r in &results {
        println!("{}", r.line());
    }
    let passed = results.iter().filter(|c| c.passed).count();
    println!("{passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}
