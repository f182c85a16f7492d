//! Gauss hypergeometric values at 1 and beta values as gamma monomials, with
//! an independent series evaluation as the numeric check.

use rug::ops::Pow;
use rug::Float;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::numeric::gamma::bernoulli;
use crate::numeric::{BigBall, PrecisionConfig};
use crate::rational::Rational;
use crate::relations::simplify_gamma_term;

/// Parameters of `2F1(a, b; c; 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypergeometricSpec {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

fn nonpositive_integer(x: &Rational) -> bool {
    x.is_integer() && !x.is_positive()
}

impl HypergeometricSpec {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Self {
        HypergeometricSpec { a, b, c }
    }

    /// `c - a - b`; the series converges at 1 iff this is positive.
    pub fn excess(&self) -> Rational {
        &(&self.c - &self.a) - &self.b
    }

    /// True when `a` or `b` is a nonpositive integer, so the series is a polynomial.
    pub fn is_terminating(&self) -> bool {
        nonpositive_integer(&self.a) || nonpositive_integer(&self.b)
    }

    fn check(&self) -> Result<()> {
        if nonpositive_integer(&self.c) {
            return Err(Error::Pole(self.c.to_string()));
        }
        let s = self.excess();
        if !s.is_positive() {
            return Err(Error::DivergentAtOne(s.to_string()));
        }
        Ok(())
    }
}

/// `2F1(a, b; c; 1) = Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b))`.
pub fn gauss_value(spec: &HypergeometricSpec) -> Result<Monomial> {
    spec.check()?;
    let one = Rational::one();
    simplify_gamma_term(&[
        (spec.c.clone(), one.clone()),
        (spec.excess(), one.clone()),
        (&spec.c - &spec.a, -one.clone()),
        (&spec.c - &spec.b, -one),
    ])
}

/// `B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b)`.
pub fn beta_value(a: &Rational, b: &Rational) -> Result<Monomial> {
    let one = Rational::one();
    simplify_gamma_term(&[(a.clone(), one.clone()), (b.clone(), one.clone()), (a + b, -one)])
}

/// Term ratio `t_(k+1) / t_k`.
fn ratio(spec: &HypergeometricSpec, k: i64) -> Rational {
    let num = &(&spec.a + k) * &(&spec.b + k);
    let den = &(&spec.c + k) * &Rational::from_int(k + 1);
    &num / &den
}

/// Bernoulli polynomial `B_n(x)`.
fn bernoulli_poly(n: usize, x: &Rational) -> Rational {
    let mut acc = Rational::zero();
    let mut binom = rug::Integer::from(1);
    let mut xp = Rational::one();
    // sum over k = n, n-1, ..., 0 of C(n, k) B_k x^(n-k)
    for j in 0..=n {
        let k = n - j;
        acc += &(&(&bernoulli(k) * &Rational::from(binom.clone())) * &xp);
        xp = &xp * x;
        binom *= k;
        binom /= j + 1;
    }
    acc
}

/// Coefficients `e_j` with `t_k ~ C k^(-1-s) sum_j e_j k^(-j)`, exactly.
fn tail_coefficients(spec: &HypergeometricSpec, count: usize) -> Vec<Rational> {
    // log of Gamma(k+a) Gamma(k+b) / (Gamma(k+c) Gamma(k+1)) beyond its leading power
    let one = Rational::one();
    let d: Vec<Rational> = (0..count)
        .map(|n| {
            if n == 0 {
                return Rational::zero();
            }
            let sum = &(&(&bernoulli_poly(n + 1, &spec.a) + &bernoulli_poly(n + 1, &spec.b))
                - &bernoulli_poly(n + 1, &spec.c))
                - &bernoulli_poly(n + 1, &one);
            let scale = Rational::new(if n % 2 == 1 { 1 } else { -1 }, (n * (n + 1)) as i64);
            &sum * &scale
        })
        .collect();
    let mut e = vec![Rational::one()];
    for m in 1..count {
        let mut acc = Rational::zero();
        for n in 1..=m {
            acc += &(&(&d[n] * (n as i64)) * &e[m - n]);
        }
        e.push(&acc / &Rational::from_int(m as i64));
    }
    e
}

/// `sum_(k >= K) k^(-sigma)` by Euler-Maclaurin, and the size of the last correction.
fn hurwitz_zeta(sigma: &Float, k: u64, prec: u32) -> (Float, Float) {
    let kf = Float::with_val(prec, k);
    let mut acc = Float::with_val(prec, (&kf).pow(Float::with_val(prec, 1 - sigma))) / Float::with_val(prec, sigma - 1u32);
    let lead = Float::with_val(prec, (&kf).pow(Float::with_val(prec, -sigma)));
    acc += Float::with_val(prec, &lead / 2u32);
    // rising factorial (sigma)_(2j-1) and (2j)!
    let mut rising = Float::with_val(prec, sigma);
    let mut fact = Float::with_val(prec, 2u32);
    let mut kpow = Float::with_val(prec, &lead / &kf);
    let mut last = Float::with_val(prec, 0);
    for j in 1..=30usize {
        let b = bernoulli(2 * j);
        let term = Float::with_val(prec, b.as_gmp()) / &fact * &rising * &kpow;
        last = Float::with_val(prec, term.abs_ref());
        acc += term;
        let s2 = Float::with_val(prec, sigma + (2 * j - 1) as u32);
        let s3 = Float::with_val(prec, sigma + (2 * j) as u32);
        rising *= s2 * s3;
        fact *= ((2 * j + 1) * (2 * j + 2)) as u32;
        kpow /= Float::with_val(prec, &kf * &kf);
    }
    (acc, last)
}

/// `2F1(a, b; c; 1)` from its series: exact for terminating series, otherwise
/// a partial sum plus an asymptotic expansion of the tail in powers of `1/k`.
/// The radius includes the first neglected tail term, so it is an estimate.
pub fn gauss_numeric(spec: &HypergeometricSpec, cfg: &PrecisionConfig) -> Result<BigBall> {
    if nonpositive_integer(&spec.c) {
        return Err(Error::Pole(spec.c.to_string()));
    }
    let prec = cfg.bits();
    if spec.is_terminating() {
        let a_int = if nonpositive_integer(&spec.a) { spec.a.to_i64() } else { None };
        let b_int = if nonpositive_integer(&spec.b) { spec.b.to_i64() } else { None };
        let n = match (a_int, b_int) {
            (Some(x), Some(y)) => -(x.max(y)),
            (Some(x), None) | (None, Some(x)) => -x,
            (None, None) => unreachable!("terminating spec"),
        };
        let mut t = Rational::one();
        let mut sum = Rational::one();
        for k in 0..n {
            t = &t * &ratio(spec, k);
            sum += &t;
        }
        return Ok(BigBall::from_rational(prec, &sum));
    }
    let s = spec.excess();
    if !s.is_positive() {
        return Err(Error::DivergentAtOne(s.to_string()));
    }
    if s < Rational::new(1, 20) {
        return Err(Error::SlowConvergence(s.to_string()));
    }
    let w = prec + 64;
    let size = [&spec.a, &spec.b, &spec.c].iter().map(|x| x.abs().to_f64().ceil()).fold(0.0, f64::max);
    let big_k = 2000 + 10 * size as u64;
    let mut t = Float::with_val(w, 1);
    let mut sum = Float::with_val(w, 0);
    for k in 0..big_k {
        sum += &t;
        t *= Float::with_val(w, ratio(spec, k as i64).as_gmp());
    }
    // t is now t_K
    let count = 40;
    let e = tail_coefficients(spec, count);
    let kf = Float::with_val(w, big_k);
    let s_f = Float::with_val(w, s.as_gmp());
    let mut shape = Float::with_val(w, 0);
    let mut kinv = Float::with_val(w, 1);
    for ej in &e {
        shape += Float::with_val(w, ej.as_gmp()) * &kinv;
        kinv /= &kf;
    }
    let lead = Float::with_val(w, (&kf).pow(Float::with_val(w, -Float::with_val(w, 1 + &s_f))));
    let c = Float::with_val(w, &t / (lead * shape));
    let mut tail = Float::with_val(w, 0);
    let mut last = Float::with_val(w, 0);
    let mut em_err = Float::with_val(w, 0);
    for (j, ej) in e.iter().enumerate() {
        let sigma = Float::with_val(w, 1 + &s_f) + j as u32;
        let (z, zerr) = hurwitz_zeta(&sigma, big_k, w);
        let term = Float::with_val(w, ej.as_gmp()) * &c * z;
        last = Float::with_val(w, term.abs_ref());
        tail += term;
        em_err += zerr * Float::with_val(w, ej.as_gmp()).abs();
    }
    let total = sum + &tail;
    let rounding = Float::with_val(w, total.abs_ref()) * Float::with_val(w, big_k) >> (w - 8) as i32;
    let rad = Float::with_val(w, 2 * last) + em_err * c.abs() + rounding;
    Ok(BigBall::with_radius(total, &rad).round_to(prec))
}
