//! Tanh-sinh quadrature on `[0, 1]` and the genus-2 integrals
//! `H1 = int_0^1 dz / sqrt(1 - z^5)`, `H2 = int_0^1 z dz / sqrt(1 - z^5)`.
//!
//! With `z = 1 - u^2` the endpoint singularity disappears:
//! `1 - (1 - t)^5 = t p(t)` with `p(t) = 5 - 10t + 10t^2 - 5t^3 + t^4`, so
//! `H1 = int_0^1 2 / sqrt(p(u^2)) du` and `H2 = int_0^1 2 (1 - u^2) / sqrt(p(u^2)) du`.

use rug::float::Constant;
use rug::Float;

use super::ball::BigBall;
use super::elliptic::FormulaCheck;
use super::eval::eval_monomial_bits;
use super::gamma::gamma_bits;
use super::precision::PrecisionConfig;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::rational::q;

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    /// Last estimate; the radius is the difference to the previous level.
    pub value: BigBall,
    /// `|I_l - I_(l-1)|` for every level computed, starting at level 2.
    pub estimates: Vec<f64>,
}

/// Integrates `f` over `[0, 1]`, halving the step until two consecutive levels
/// agree to `10^-decimal_digits` (relative).
pub fn tanh_sinh<F>(f: F, cfg: &PrecisionConfig, max_level: u32) -> Result<QuadratureResult>
where
    F: Fn(&Float) -> Float,
{
    let w = cfg.bits() + 16;
    let mut eps = Float::with_val(w, 1);
    eps >>= w;
    let tol = Float::with_val(64, cfg.tolerance());
    let mut previous: Option<Float> = None;
    let mut estimates = Vec::new();
    for level in 1..=max_level {
        let value = level_sum(&f, level, w, &eps);
        if let Some(prev) = &previous {
            let diff = Float::with_val(w, &value - prev).abs();
            estimates.push(diff.to_f64());
            let scale = Float::with_val(64, value.abs_ref());
            if diff <= Float::with_val(64, &tol * &scale) {
                let mut guard = scale;
                guard >>= cfg.bits();
                let rad = Float::with_val(64, &diff + &guard);
                return Ok(QuadratureResult {
                    value: BigBall::with_radius(value, &rad).round_to(cfg.bits()),
                    estimates,
                });
            }
        }
        previous = Some(value);
    }
    Err(Error::Convergence(format!("tanh-sinh did not converge by level {max_level}")))
}

/// Trapezoidal sum with step `2^-level` after the tanh-sinh substitution
/// `x = (1 + tanh(pi/2 sinh t)) / 2`.
fn level_sum<F>(f: &F, level: u32, w: u32, eps: &Float) -> Float
where
    F: Fn(&Float) -> Float,
{
    let half_pi = Float::with_val(w, Constant::Pi) / 2u32;
    let mut h = Float::with_val(w, 1);
    h >>= level;
    let mut total = Float::with_val(w, 0);
    let mut k: i64 = 0;
    loop {
        let t = Float::with_val(w, &h * k);
        let mut term_sum = Float::with_val(w, 0);
        let (sinh_t, cosh_t) = t.clone().sinh_cosh(Float::new(w));
        let u = Float::with_val(w, &half_pi * &sinh_t);
        let cosh_u = Float::with_val(w, u.cosh_ref());
        // weight = (pi/4) cosh t / cosh^2 u
        let weight = Float::with_val(w, &half_pi * &cosh_t) / 2u32 / Float::with_val(w, cosh_u.square_ref());
        // 1 - x = e^-u / (2 cosh u) keeps full relative accuracy near x = 1
        let e_neg = Float::with_val(w, (-u.clone()).exp_ref());
        let one_minus_x = Float::with_val(w, &e_neg / &cosh_u) / 2u32;
        let x = Float::with_val(w, 1 - &one_minus_x);
        term_sum += Float::with_val(w, f(&x) * &weight);
        if k > 0 {
            // mirror point: x' = 1 - x
            term_sum += Float::with_val(w, f(&one_minus_x) * &weight);
        }
        let small = Float::with_val(w, term_sum.abs_ref()) < *eps && k > 0;
        total += term_sum;
        if small || k > 1_000_000 {
            break;
        }
        k += 1;
    }
    total * h
}

/// `p(t) = 5 - 10t + 10t^2 - 5t^3 + t^4`.
fn quintic_factor(t: &Float) -> Float {
    let w = t.prec();
    let mut acc = Float::with_val(w, 1);
    for c in [-5i32, 10, -10, 5] {
        acc *= t;
        acc += c;
    }
    acc
}

/// `H1` (`j = 1`) or `H2` (`j = 2`).
pub fn hyperelliptic_h(j: u32, cfg: &PrecisionConfig) -> Result<QuadratureResult> {
    let integrand = move |u: &Float| -> Float {
        let w = u.prec();
        let t = Float::with_val(w, u.square_ref());
        let root = quintic_factor(&t).sqrt();
        let numer = if j == 1 { Float::with_val(w, 2) } else { Float::with_val(w, 1 - &t) * 2u32 };
        numer / root
    };
    match j {
        1 | 2 => tanh_sinh(integrand, cfg, 16),
        _ => Err(Error::Domain(format!("no hyperelliptic integral H{j}"))),
    }
}

/// `5 H1 = B(1/5, 1/2)`, `5 H2 = B(2/5, 1/2)` and the two reconstructions of
/// `Gamma(1/5)`, `Gamma(2/5)` from `H1`, `H2`, against the gamma oracle.
pub fn verify_hyperelliptic(cfg: &PrecisionConfig) -> Result<Vec<FormulaCheck>> {
    let w = cfg.bits() + 16;
    let h1 = hyperelliptic_h(1, cfg)?.value;
    let h2 = hyperelliptic_h(2, cfg)?.value;
    let g = |n, d| gamma_bits(&q(n, d), w);
    let five = BigBall::from_int(w, 5);
    let beta = |a: BigBall, b: BigBall, c: BigBall| a.mul(&b).div(&c);
    let surd = |src: &str| eval_monomial_bits(&Monomial::from_dsl(src).expect("valid factors"), w);
    Ok(vec![
        FormulaCheck::new("5 H1 = B(1/5, 1/2)", five.mul(&h1), beta(g(1, 5)?, g(1, 2)?, g(7, 10)?)?),
        FormulaCheck::new("5 H2 = B(2/5, 1/2)", five.mul(&h2), beta(g(2, 5)?, g(1, 2)?, g(9, 10)?)?),
        FormulaCheck::new(
            "Gamma(1/5) = pi^(1/5) 2^(19/50) sqrt5 phi^(1/10) H1^(2/5) H2^(1/5)",
            surd("pi^1/5 2^19/50 5^1/2 phi^1/10")?
                .mul(&h1.pow_rational(&q(2, 5))?)
                .mul(&h2.pow_rational(&q(1, 5))?),
            g(1, 5)?,
        ),
        FormulaCheck::new(
            "Gamma(2/5) = pi^(2/5) 2^(4/25) phi^(1/5) H1^(-1/5) H2^(2/5)",
            surd("pi^2/5 2^4/25 phi^1/5")?
                .mul(&h1.pow_rational(&q(-1, 5))?)
                .mul(&h2.pow_rational(&q(2, 5))?),
            g(2, 5)?,
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_integral() {
        // int_0^1 x^2 dx = 1/3
        let cfg = PrecisionConfig::new(30);
        let r = tanh_sinh(|x: &Float| Float::with_val(x.prec(), x.square_ref()), &cfg, 12).unwrap();
        let third = BigBall::from_rational(cfg.bits(), &q(1, 3));
        assert!(r.value.max_abs_deviation(&third) < 1e-29);
    }

    #[test]
    fn endpoint_singularity() {
        // int_0^1 dx / sqrt(x) = 2, handled by the double-exponential decay
        let cfg = PrecisionConfig::new(20);
        let r = tanh_sinh(|x: &Float| Float::with_val(x.prec(), x.recip_sqrt_ref()), &cfg, 14).unwrap();
        assert!(r.value.max_abs_deviation(&BigBall::from_int(cfg.bits(), 2)) < 1e-18);
    }

    #[test]
    fn h_values_and_error_decay() {
        let cfg = PrecisionConfig::new(40);
        for j in [1, 2] {
            let r = hyperelliptic_h(j, &cfg).unwrap();
            assert!(r.value.rad_f64() <= 1e-30);
            let tol = cfg.tolerance();
            for pair in r.estimates.windows(2) {
                if pair[0] > tol {
                    assert!(pair[1] * 10.0 <= pair[0], "estimates {:?}", r.estimates);
                }
            }
        }
        assert!(hyperelliptic_h(3, &cfg).is_err());
    }

    #[test]
    fn level_cap_reports_non_convergence() {
        let cfg = PrecisionConfig::new(40);
        let r = tanh_sinh(|x: &Float| Float::with_val(x.prec(), x.recip_sqrt_ref()), &cfg, 2);
        assert!(matches!(r, Err(Error::Convergence(_))));
    }

    #[test]
    fn beta_identities() {
        for c in verify_hyperelliptic(&PrecisionConfig::new(40)).unwrap() {
            assert!(c.passes(1e-30), "{}: {}", c.name, c.deviation);
        }
    }
}
