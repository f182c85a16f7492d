use std::process::Command as Process;

use clap::Parser;
use gammaval::relations::reduce;
use gammaval::{q, Monomial};
use gammaval_cli::expr::parse_expr;
use gammaval_cli::run::{execute, Cli};
use proptest::prelude::*;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["gammaval"];
    argv.extend_from_slice(args);
    let cli = Cli::try_parse_from(argv).expect("arguments parse");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = execute(&cli, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn binary(args: &[&str]) -> (i32, String, String) {
    let o = Process::new(env!("CARGO_BIN_EXE_gammaval")).args(args).output().unwrap();
    (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap(), String::from_utf8(o.stderr).unwrap())
}

#[test]
fn reduce_in_every_format() {
    let (code, out, _) = run(&["reduce", "2/3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), reduce(&q(2, 3)).unwrap().to_text());
    let (_, out, _) = run(&["reduce", "2/3", "--format", "latex"]);
    assert_eq!(out.trim(), r"\pi\,2\,3^{-1/2}\;\Gamma\!\left(\tfrac{1}{3}\right)^{-1}");
    for x in ["1/2", "7/3", "5/24", "-3/2", "11/120"] {
        let (code, out, _) = run(&["reduce", x, "--format", "json"]);
        assert_eq!(code, 0, "{x}");
        let want = reduce(&x.parse().unwrap()).unwrap();
        assert_eq!(Monomial::from_json(out.trim()).unwrap(), want, "{x}");
    }
}

#[test]
fn gauss_beta_and_simplify() {
    let (code, out, _) = run(&["gauss", "1/4", "-1/12", "2/3"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "2^(-1/4) * 3^(-3/8) * (sqrt3+1)^(1/2)");
    let (code, out, _) = run(&["beta", "1/2", "1/2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), Monomial::pi_pow(q(1, 1)).to_text());
    let (code, out, _) = run(&["simplify", "Gamma(1/3)^2 * Gamma(2/3) / pi"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), Monomial::from_dsl("2 3^-1/2 G(1/3)").unwrap().to_text());
}

#[test]
fn table_kubert_and_eval() {
    let (code, out, _) = run(&["table", "24"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 10);
    assert!(out.contains("Gamma(1/24) = "));
    let (_, out, _) = run(&["table", "120", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert!(v.as_object().unwrap().contains_key("41/120"));
    assert_eq!(run(&["kubert-rank", "120"]).1.trim(), "16");
    let (code, out, _) = run(&["eval", "Gamma(1/2)^2 / pi", "--digits", "30"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1.0000000000"), "{out}");
}

#[test]
fn errors_and_exit_codes() {
    let (code, _, err) = run(&["reduce", "1/7"]);
    assert_eq!(code, 1);
    assert_eq!(err.trim(), "error[unsupported-denominator]: unsupported denominator 7");
    let (code, _, err) = run(&["reduce", "0"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("error[pole]"), "{err}");
    let (code, _, err) = run(&["simplify", "Gamma(1/3"]);
    assert_eq!(code, 2);
    assert!(err.contains("10"), "{err}");
    let (code, _, err) = run(&["reduce", "-1/2"]);
    assert_eq!(code, 1);
    assert!(err.contains("negative"), "{err}");
    assert_eq!(run(&["gauss", "1", "1", "1"]).0, 1);
    assert_eq!(run(&["table", "7"]).0, 1);
    assert_eq!(run(&["kubert-rank", "2"]).0, 1);
}

#[test]
fn binary_exit_codes() {
    let (code, out, _) = binary(&["reduce", "1/4"]);
    assert_eq!(code, 0);
    assert!(!out.is_empty());
    let (code, _, err) = binary(&["reduce", "1/7"]);
    assert_eq!(code, 1);
    assert!(err.contains("unsupported denominator 7"));
    assert_eq!(binary(&["simplify", "Gamma("]).0, 2);
    assert_eq!(binary(&["--no-such-flag"]).0, 2);
}

#[test]
fn verify_all_passes_and_is_deterministic() {
    let (code, out, _) = binary(&["verify-all", "--digits", "30"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.lines().all(|l| !l.starts_with("FAIL")));
    assert_eq!(binary(&["verify-all", "--digits", "30"]).1, out);
    let (_, a, _) = run(&["table", "60", "--format", "latex"]);
    let (_, b, _) = run(&["table", "60", "--format", "latex"]);
    assert_eq!(a, b);
}

fn exponent() -> impl Strategy<Value = String> {
    (-6i64..=6, prop::sample::select(vec![1i64, 2, 3, 4, 6])).prop_map(|(k, d)| q(k, d).to_string())
}

fn factor() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (1i64..120, prop::sample::select(vec![24i64, 60, 120])).prop_map(|(k, n)| format!("Gamma({k}/{n})")),
        Just("pi".to_string()),
        (1u32..60).prop_map(|n| n.to_string()),
    ];
    let primary = leaf.prop_recursive(2, 12, 3, |inner| {
        prop::collection::vec(inner, 1..4).prop_map(|v| format!("({})", v.join(" / ")))
    });
    (primary, prop::option::of(exponent())).prop_map(|(p, e)| match e {
        Some(e) => format!("{p}^({e})"),
        None => p,
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn rendered_expressions_parse_back(parts in prop::collection::vec(factor(), 1..5)) {
        let text = parts.join(" * ");
        let e = parse_expr(&text).unwrap();
        let again = parse_expr(&e.to_string()).unwrap();
        prop_assert_eq!(&again, &e);
        prop_assert_eq!(again.to_monomial().ok(), e.to_monomial().ok());
    }
}
