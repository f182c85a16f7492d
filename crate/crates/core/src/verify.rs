//! End-to-end checks shared by the command line and the acceptance run.
//! Every check takes a decimal precision and uses a tolerance tied to it.

use crate::hypergeometric::{gauss_numeric, gauss_value, HypergeometricSpec};
use crate::monomial::Monomial;
use crate::numeric::eval::eval_monomial_bits;
use crate::numeric::gamma::gamma_bits;
use crate::numeric::{verify_elliptic_formulas, verify_hyperelliptic, FormulaCheck, PrecisionConfig};
use crate::rational::{q, Rational};
use crate::relations::extension::extend_with_steps;
use crate::relations::{derive_table, euler_phi, extension_table, hardcoded_table, kubert_rank};
use crate::trig::verify_lemma_tables;

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    /// Largest numeric deviation seen, when the check is numeric.
    pub max_deviation: Option<f64>,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &str, passed: bool, max_deviation: Option<f64>, detail: String) -> Self {
        CheckOutcome { name: name.into(), passed, max_deviation, detail }
    }

    /// `PASS name (max deviation ..., detail)`.
    pub fn line(&self) -> String {
        let mut parts = Vec::new();
        if let Some(d) = self.max_deviation {
            parts.push(format!("max deviation {d:.3e}"));
        }
        if !self.detail.is_empty() {
            parts.push(self.detail.clone());
        }
        let status = if self.passed { "PASS" } else { "FAIL" };
        if parts.is_empty() {
            format!("{status} {}", self.name)
        } else {
            format!("{status} {} ({})", self.name, parts.join(", "))
        }
    }
}

fn bits(digits: u32) -> u32 {
    PrecisionConfig::new(digits).bits()
}

fn tol(exponent: i64) -> f64 {
    10f64.powi(-(exponent as i32))
}

fn failed(name: &str, e: impl std::fmt::Display) -> CheckOutcome {
    CheckOutcome::new(name, false, None, format!("error: {e}"))
}

/// Every table entry against the numeric gamma oracle at `digits`, to `10^-(digits-5)`.
pub fn table_sweep(digits: u32) -> CheckOutcome {
    let name = "table entries match numeric gamma";
    let b = bits(digits);
    let limit = tol(i64::from(digits) - 5);
    let mut worst = 0f64;
    let mut bad = Vec::new();
    for (x, m) in &hardcoded_table().entries {
        let dev = match (eval_monomial_bits(m, b), gamma_bits(x, b)) {
            (Ok(v), Ok(g)) => v.max_rel_deviation(&g),
            _ => f64::INFINITY,
        };
        worst = worst.max(dev);
        if !(dev < limit) {
            bad.push(x.to_string());
        }
    }
    let n = hardcoded_table().len();
    let mut detail = format!("{n} entries");
    if !bad.is_empty() {
        detail.push_str(&format!(", failing at {}", bad.join(" ")));
    }
    CheckOutcome::new(name, bad.is_empty(), Some(worst), detail)
}

/// The derived table equals the hardcoded table as canonical monomials.
pub fn derivation_oracle() -> CheckOutcome {
    let name = "derived table equals hardcoded table";
    match derive_table() {
        Ok(t) => {
            let table = hardcoded_table();
            let mismatches: Vec<String> = table
                .entries
                .iter()
                .filter(|(x, m)| t.get(x) != Some(*m))
                .map(|(x, _)| x.to_string())
                .collect();
            let extra = t.len() != table.len();
            let detail = format!("{} entries, {} mismatches", table.len(), mismatches.len());
            CheckOutcome::new(name, mismatches.is_empty() && !extra, None, detail)
        }
        Err(e) => failed(name, e),
    }
}

/// `kubert_rank(N) = phi(N)/2` for each `N`.
pub fn kubert_ranks(ns: &[i64]) -> CheckOutcome {
    let name = "kubert ranks equal phi(N)/2";
    let mut ok = true;
    let mut shown = Vec::new();
    for &n in ns {
        match kubert_rank(n) {
            Ok(r) => {
                let want = euler_phi(n as u64) / 2;
                ok &= r as u64 == want;
                shown.push(format!("{n}:{r}"));
            }
            Err(e) => return failed(name, e),
        }
    }
    CheckOutcome::new(name, ok, None, shown.join(" "))
}

/// The exponential table, the surd identities and the sine table, with the
/// numeric comparison at `digits` digits to `10^-(digits-5)`.
pub fn lemma_checks(digits: u32) -> Vec<CheckOutcome> {
    let r = verify_lemma_tables(digits);
    let limit = tol(i64::from(digits) - 5);
    let fails = r.failures();
    let exp_ok = r.exp_table_ok() && r.max_numeric_deviation < limit;
    let exp_detail = format!(
        "{} entries, {} exact circle checks, {} products",
        r.root_of_unity.len(),
        r.pythagorean.iter().filter(|(_, ok)| *ok).count(),
        r.products.len()
    );
    let surd_dev = r.surd.iter().map(|c| c.deviation).fold(0.0, f64::max);
    let sine_dev = r.sines.iter().map(|c| c.deviation).fold(0.0, f64::max);
    let with_failures = |mut d: String, ok: bool| {
        if !ok && !fails.is_empty() {
            d.push_str(&format!(", failures: {}", fails.join("; ")));
        }
        d
    };
    vec![
        CheckOutcome::new(
            "exponential table exact and numeric",
            exp_ok,
            Some(r.max_numeric_deviation),
            with_failures(exp_detail, exp_ok),
        ),
        CheckOutcome::new(
            "surd identities exact with signs",
            r.surd_ok(),
            Some(surd_dev),
            with_failures(format!("{} identities", r.surd.len()), r.surd_ok()),
        ),
        CheckOutcome::new(
            "sine table exact",
            r.sines_ok(),
            Some(sine_dev),
            with_failures(format!("{} sines", r.sines.len()), r.sines_ok()),
        ),
    ]
}

/// The four printed hypergeometric values: canonical forms and series agreement to `10^-12`.
pub fn hypergeometric_examples(digits: u32) -> CheckOutcome {
    let name = "hypergeometric examples";
    let cases = [
        ((q(1, 4), q(-1, 12), q(2, 3)), "sqrt3+1^1/2 2^-1/4 3^-3/8"),
        ((q(5, 24), q(-1, 24), q(2, 3)), "sqrt3+sqrt2^1/2 2^-1/12 3^-1/2"),
        ((q(11, 60), q(-1, 60), q(2, 3)), "phi*^1/2 sqrt3+1^1/2 sqrt5+sqrt3^1/2 2^-1 3^-1/2 5^-7/24"),
        ((q(3, 10), q(-1, 30), q(3, 5)), "sqrt15+psi^1/2 2^-19/30 3^-1/20 5^-1/3"),
    ];
    let cfg = PrecisionConfig::new(digits);
    let mut worst = 0f64;
    let mut bad = Vec::new();
    for ((a, b, c), printed) in cases {
        let spec = HypergeometricSpec::new(a, b, c);
        let label = format!("({}, {}, {})", spec.a, spec.b, spec.c);
        let Ok(value) = gauss_value(&spec) else {
            bad.push(label);
            continue;
        };
        if Monomial::from_dsl(printed).ok() != Some(value.clone()) {
            bad.push(format!("{label} form"));
        }
        let dev = match (eval_monomial_bits(&value, cfg.bits()), gauss_numeric(&spec, &cfg)) {
            (Ok(v), Ok(s)) => s.max_rel_deviation(&v),
            _ => f64::INFINITY,
        };
        worst = worst.max(dev);
        if !(dev < 1e-12) {
            bad.push(format!("{label} series"));
        }
    }
    let detail = if bad.is_empty() { "4 specs".to_string() } else { format!("failing: {}", bad.join(", ")) };
    CheckOutcome::new(name, bad.is_empty(), Some(worst), detail)
}

fn formula_outcome(name: &str, checks: crate::Result<Vec<FormulaCheck>>, limit: f64) -> CheckOutcome {
    match checks {
        Ok(v) => {
            let worst = v.iter().map(|c| c.deviation).fold(0.0, f64::max);
            let bad: Vec<&str> = v.iter().filter(|c| !(c.deviation < limit)).map(|c| c.name.as_str()).collect();
            let detail = if bad.is_empty() {
                format!("{} formulas", v.len())
            } else {
                format!("failing: {}", bad.join("; "))
            };
            CheckOutcome::new(name, bad.is_empty(), Some(worst), detail)
        }
        Err(e) => failed(name, e),
    }
}

/// Elliptic-integral formulas at `digits`, to `10^-(digits-5)`.
pub fn elliptic(digits: u32) -> CheckOutcome {
    formula_outcome(
        "elliptic integral formulas",
        verify_elliptic_formulas(&PrecisionConfig::new(digits)),
        tol(i64::from(digits) - 5),
    )
}

/// Hyperelliptic-integral formulas with quadrature at `digits`, to `10^-(digits-10)`.
pub fn hyperelliptic(digits: u32) -> CheckOutcome {
    formula_outcome(
        "hyperelliptic integral formulas",
        verify_hyperelliptic(&PrecisionConfig::new(digits)),
        tol(i64::from(digits) - 10),
    )
}

/// Every extension value against numeric gamma at `digits`, to `10^-(digits-15)`,
/// and the fourteen listed points solved in order.
pub fn extension_sweep(digits: u32) -> CheckOutcome {
    let name = "denominator 120 extension";
    let table = match extension_table() {
        Ok(t) => t,
        Err(e) => return failed(name, e),
    };
    let b = bits(digits);
    let limit = tol(i64::from(digits) - 15);
    let mut worst = 0f64;
    let mut bad = Vec::new();
    for (x, m) in table {
        let dev = match (eval_monomial_bits(m, b), gamma_bits(x, b)) {
            (Ok(v), Ok(g)) => v.max_rel_deviation(&g),
            _ => f64::INFINITY,
        };
        worst = worst.max(dev);
        if !(dev < limit) {
            bad.push(x.to_string());
        }
    }
    let order_ok = match extend_with_steps() {
        Ok(ext) => {
            let solved: Vec<Rational> = ext
                .steps
                .iter()
                .flat_map(|s| s.determined.clone())
                .filter(|x| x.denom() == &rug::Integer::from(120))
                .take(14)
                .collect();
            let want: Vec<Rational> =
                [41, 47, 91, 61, 67, 71, 31, 101, 107, 59, 83, 43, 23, 103].iter().map(|&k| q(k, 120)).collect();
            solved == want
        }
        Err(_) => false,
    };
    let mut detail = format!("{} points", table.len());
    if !order_ok {
        detail.push_str(", listed points not solved in order");
    }
    if !bad.is_empty() {
        detail.push_str(&format!(", failing at {}", bad.join(" ")));
    }
    CheckOutcome::new(name, bad.is_empty() && order_ok, Some(worst), detail)
}
