//! The tabulated exponential values and the surd product identities, stored
//! as data in their printed form and verified exactly.

use rug::float::Constant;
use rug::Float;

use super::circle::{exp_i_pi, UnitCirclePoint};
use super::product::{IdentityCheck, PowerProduct};
use super::sines::certify_sine_table;
use super::tower::{consts::*, TowerElement};
use crate::numeric::BigBall;
use crate::rational::Rational;

/// One tabulated value `exp(i pi k/n) = re + i im` in printed form.
#[derive(Clone, Debug)]
pub struct ExpEntry {
    pub k: i64,
    pub n: i64,
    pub printed: &'static str,
    pub re: PowerProduct,
    pub im: PowerProduct,
}

fn pp(base: TowerElement) -> PowerProduct {
    PowerProduct::of(base)
}

/// `x / (d sqrt(r))`.
fn over(x: PowerProduct, d: i64, r: i64) -> PowerProduct {
    x.pow(int(d), -1, 1).pow(int(r), -1, 2)
}

/// The 18 exponential values: the two classical seeds and the sixteen
/// nontrivial entries. `exp(2 i pi/15)` and `exp(7 i pi/15)` carry the sign of
/// their imaginary parts corrected so that they lie in the upper half plane.
pub fn exp_table() -> Vec<ExpEntry> {
    let (s2, s3, s5) = (sqrt2(), sqrt3(), sqrt5());
    let (ph, phs, ps, pss) = (phi(), phi_star(), psi(), psi_star());
    let one = int(1);
    let two = int(2);
    let e = |k, n, printed, re, im| ExpEntry { k, n, printed, re, im };
    let quartic = |a: TowerElement, b: TowerElement, num: i64| {
        (
            PowerProduct::new().pow(a, 1, 2).pow(int(2), -num, 4),
            PowerProduct::new().pow(b, 1, 2).pow(int(2), -num, 4),
        )
    };
    let (re8, im8) = quartic(&s2 + &one, &s2 - &one, 3);
    let (re24, im24) = quartic(&(&two * &s2) + &(&s3 + &one), &(&two * &s2) - &(&s3 + &one), 5);
    let (re724, im724) = quartic(&(&(&two * &s2) - &s3) + &one, &(&(&two * &s2) + &s3) - &one, 5);
    let sixty = |c: &TowerElement, a: TowerElement, b: TowerElement| {
        over(pp(c.clone()).times(a, Rational::one()).times(b, Rational::one()), 8, 10)
    };
    vec![
        e(1, 3, "exp(i pi/3) = (1 + i sqrt3)/2", pp(rat(1, 2)), over(pp(s3.clone()), 2, 1)),
        e(1, 4, "exp(i pi/4) = (1 + i)/sqrt2", pp(one.clone()).pow(int(2), -1, 2), pp(one.clone()).pow(int(2), -1, 2)),
        e(1, 5, "exp(i pi/5) = phi (1 + i psi*)/(4 sqrt5)", over(pp(ph.clone()), 4, 5), over(pp(&ph * &pss), 4, 5)),
        e(2, 5, "exp(2i pi/5) = phi* (1 + i psi)/(4 sqrt5)", over(pp(phs.clone()), 4, 5), over(pp(&phs * &ps), 4, 5)),
        e(1, 8, "exp(i pi/8) = (sqrt(sqrt2+1) + i sqrt(sqrt2-1))/2^(3/4)", re8, im8),
        e(1, 12, "exp(i pi/12) = (sqrt3 + 1 + i(sqrt3 - 1))/(2 sqrt2)", over(pp(&s3 + &one), 2, 2), over(pp(&s3 - &one), 2, 2)),
        e(
            1,
            15,
            "exp(i pi/15) = phi* (sqrt3 psi + 1 + i(psi - sqrt3))/(8 sqrt5)",
            over(pp(&phs * &(&(&s3 * &ps) + &one)), 8, 5),
            over(pp(&phs * &(&ps - &s3)), 8, 5),
        ),
        e(
            2,
            15,
            "exp(2i pi/15) = phi (sqrt3 psi* + 1 + i(sqrt3 - psi*))/(8 sqrt5)",
            over(pp(&ph * &(&(&s3 * &pss) + &one)), 8, 5),
            over(pp(&ph * &(&s3 - &pss)), 8, 5),
        ),
        e(
            4,
            15,
            "exp(4i pi/15) = phi* (sqrt3 psi - 1 + i(psi + sqrt3))/(8 sqrt5)",
            over(pp(&phs * &(&(&s3 * &ps) - &one)), 8, 5),
            over(pp(&phs * &(&ps + &s3)), 8, 5),
        ),
        e(
            7,
            15,
            "exp(7i pi/15) = phi (sqrt3 psi* - 1 + i(sqrt3 + psi*))/(8 sqrt5)",
            over(pp(&ph * &(&(&s3 * &pss) - &one)), 8, 5),
            over(pp(&ph * &(&s3 + &pss)), 8, 5),
        ),
        e(
            1,
            20,
            "exp(i pi/20) = sqrt(phi*) (psi + sqrt5 + i(psi - sqrt5))/(4 sqrt5)",
            over(pp(sqrt_phi_star() * (&ps + &s5)), 4, 5),
            over(pp(sqrt_phi_star() * (&ps - &s5)), 4, 5),
        ),
        e(
            3,
            20,
            "exp(3i pi/20) = sqrt(phi) (sqrt5 + psi* + i(sqrt5 - psi*))/(4 sqrt5)",
            over(pp(sqrt_phi() * (&s5 + &pss)), 4, 5),
            over(pp(sqrt_phi() * (&s5 - &pss)), 4, 5),
        ),
        e(1, 24, "exp(i pi/24) = (sqrt(2 sqrt2 + sqrt3 + 1) + i sqrt(2 sqrt2 - sqrt3 - 1))/2^(5/4)", re24, im24),
        e(7, 24, "exp(7i pi/24) = (sqrt(2 sqrt2 - sqrt3 + 1) + i sqrt(2 sqrt2 + sqrt3 - 1))/2^(5/4)", re724, im724),
        e(
            1,
            60,
            "exp(i pi/60) = phi* ((sqrt3 + 1)(psi - sqrt3 + 2) + i(sqrt3 - 1)(sqrt3 - psi + 2))/(8 sqrt10)",
            sixty(&phs, &s3 + &one, &(&ps - &s3) + &two),
            sixty(&phs, &s3 - &one, &(&s3 - &ps) + &two),
        ),
        e(
            7,
            60,
            "exp(7i pi/60) = phi ((sqrt3 - 1)(psi* + sqrt3 + 2) + i(sqrt3 + 1)(sqrt3 + psi* - 2))/(8 sqrt10)",
            sixty(&ph, &s3 - &one, &(&pss + &s3) + &two),
            sixty(&ph, &s3 + &one, &(&s3 + &pss) - &two),
        ),
        e(
            13,
            60,
            "exp(13i pi/60) = phi ((sqrt3 + 1)(psi* - sqrt3 + 2) + i(sqrt3 - 1)(sqrt3 - psi* + 2))/(8 sqrt10)",
            sixty(&ph, &s3 + &one, &(&pss - &s3) + &two),
            sixty(&ph, &s3 - &one, &(&s3 - &pss) + &two),
        ),
        e(
            19,
            60,
            "exp(19i pi/60) = phi* ((sqrt3 - 1)(psi + sqrt3 + 2) + i(sqrt3 + 1)(sqrt3 + psi - 2))/(8 sqrt10)",
            sixty(&phs, &s3 - &one, &(&ps + &s3) + &two),
            sixty(&phs, &s3 + &one, &(&s3 + &ps) - &two),
        ),
    ]
}

/// The products whose simplification links each tabulated value to earlier
/// ones: `(a, b)` stands for `exp(i pi a) exp(i pi b)`.
pub const PRODUCT_CHAIN: [((i64, i64), (i64, i64)); 14] = [
    ((1, 8), (1, 8)),
    ((1, 12), (1, 4)),
    ((1, 15), (1, 3)),
    ((1, 15), (1, 15)),
    ((2, 15), (2, 15)),
    ((2, 15), (1, 3)),
    ((1, 20), (1, 5)),
    ((3, 20), (1, 4)),
    ((1, 24), (1, 24)),
    ((1, 24), (1, 4)),
    ((1, 60), (1, 4)),
    ((1, 12), (1, 5)),
    ((1, 60), (1, 5)),
    ((7, 60), (1, 5)),
];

/// One surd identity `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct SurdIdentity {
    pub printed: String,
    pub lhs: PowerProduct,
    pub rhs: PowerProduct,
}

/// The 32 surd product identities (each `+-` line read with upper and lower signs).
/// `2 sqrt2 +- sqrt3 - 1` is stated with the corrected right-hand side
/// `(sqrt2 - 1)(sqrt3 +- 1)(sqrt3 +- sqrt2)`.
pub fn surd_identities() -> Vec<SurdIdentity> {
    let (s2, s3, s5, s10, s15) = (sqrt2(), sqrt3(), sqrt5(), sqrt10(), sqrt15());
    let (ph, phs, ps, pss, rph, rphs) = (phi(), phi_star(), psi(), psi_star(), sqrt_phi(), sqrt_phi_star());
    let one = int(1);
    let two = int(2);
    let half = |x: TowerElement| PowerProduct::new().pow(x, 1, 2);
    let roots = |a: TowerElement, b: TowerElement| PowerProduct::new().pow(a, 1, 2).pow(b, 1, 2);
    let sgn = |upper: bool| if upper { int(1) } else { int(-1) };
    let mut out = Vec::new();
    let mut push = |printed: String, lhs: PowerProduct, rhs: PowerProduct| out.push(SurdIdentity { printed, lhs, rhs });
    let pm = |upper: bool| if upper { "+" } else { "-" };
    let mp = |upper: bool| if upper { "-" } else { "+" };

    push("sqrt(sqrt15+psi) sqrt(sqrt15-psi) = sqrt2 sqrt(phi*)".into(), roots(&s15 + &ps, &s15 - &ps), roots(two.clone(), phs.clone()));
    push("sqrt(sqrt10+sqrt(phi)) sqrt(sqrt10-sqrt(phi)) = sqrt(phi*)".into(), roots(&s10 + &rph, &s10 - &rph), half(phs.clone()));
    push("sqrt(sqrt15+psi*) sqrt(sqrt15-psi*) = sqrt2 sqrt(phi)".into(), roots(&s15 + &pss, &s15 - &pss), roots(two.clone(), ph.clone()));
    push("sqrt(sqrt10+sqrt(phi*)) sqrt(sqrt10-sqrt(phi*)) = sqrt(phi)".into(), roots(&s10 + &rphs, &s10 - &rphs), half(ph.clone()));

    for u in [true, false] {
        let s = sgn(u);
        let (p, m) = (pm(u), mp(u));
        push(
            format!("sqrt(sqrt15{p}psi) sqrt(sqrt15{p}psi*) = sqrt(phi*)/sqrt2 (psi{p}sqrt3)"),
            roots(&s15 + &(&s * &ps), &s15 + &(&s * &pss)),
            half(phs.clone()).pow(two.clone(), -1, 2).times(&ps + &(&s * &s3), Rational::one()),
        );
        push(
            format!("sqrt(sqrt10{p}sqrt(phi)) sqrt(sqrt10{p}sqrt(phi*)) = psi{p}sqrt5"),
            roots(&s10 + &(&s * &rph), &s10 + &(&s * &rphs)),
            pp(&ps + &(&s * &s5)),
        );
        push(
            format!("sqrt(sqrt15{p}psi) sqrt(sqrt15{m}psi*) = sqrt(phi)/sqrt2 (sqrt3{p}psi*)"),
            roots(&s15 + &(&s * &ps), &s15 - &(&s * &pss)),
            half(ph.clone()).pow(two.clone(), -1, 2).times(&s3 + &(&s * &pss), Rational::one()),
        );
        push(
            format!("sqrt(sqrt10{p}sqrt(phi)) sqrt(sqrt10{m}sqrt(phi*)) = sqrt5{p}psi*"),
            roots(&s10 + &(&s * &rph), &s10 - &(&s * &rphs)),
            pp(&s5 + &(&s * &pss)),
        );
        push(
            format!("psi/sqrt5 (sqrt15{p}psi*) = sqrt3 psi{p}1"),
            pp(ps.clone()).pow(s5.clone(), -1, 1).times(&s15 + &(&s * &pss), Rational::one()),
            pp(&(&s3 * &ps) + &s),
        );
        push(
            format!("psi*/sqrt5 (sqrt15{p}psi) = sqrt3 psi*{p}1"),
            pp(pss.clone()).pow(s5.clone(), -1, 1).times(&s15 + &(&s * &ps), Rational::one()),
            pp(&(&s3 * &pss) + &s),
        );
    }

    // phi^(*) / (2^(7/4) 5^(1/4)) sqrt(a) sqrt(b) (c)
    let block = |c: &TowerElement, a: TowerElement, b: TowerElement, tail: TowerElement| {
        pp(c.clone())
            .pow(int(2), -7, 4)
            .pow(int(5), -1, 4)
            .pow(a, 1, 2)
            .pow(b, 1, 2)
            .times(tail, Rational::one())
    };
    for u in [true, false] {
        let s = sgn(u);
        let (p, m) = (pm(u), mp(u));
        push(
            format!("sqrt(sqrt15{p}psi) sqrt(sqrt10{p}sqrt(phi)) = phi*/(2^(7/4) 5^(1/4)) sqrt(sqrt3-1) sqrt(sqrt5+sqrt3) (sqrt3+2{p}psi)"),
            roots(&s15 + &(&s * &ps), &s10 + &(&s * &rph)),
            block(&phs, &s3 - &one, &s5 + &s3, &(&s3 + &two) + &(&s * &ps)),
        );
        push(
            format!("sqrt(sqrt15{m}psi) sqrt(sqrt10{p}sqrt(phi)) = phi*/(2^(7/4) 5^(1/4)) sqrt(sqrt3+1) sqrt(sqrt5-sqrt3) (psi{m}sqrt3{p}2)"),
            roots(&s15 - &(&s * &ps), &s10 + &(&s * &rph)),
            block(&phs, &s3 + &one, &s5 - &s3, &(&ps - &(&s * &s3)) + &(&s * &two)),
        );
        push(
            format!("sqrt(sqrt15{p}psi*) sqrt(sqrt10{p}sqrt(phi*)) = phi/(2^(7/4) 5^(1/4)) sqrt(sqrt3+1) sqrt(sqrt5+sqrt3) (psi*{m}sqrt3{p}2)"),
            roots(&s15 + &(&s * &pss), &s10 + &(&s * &rphs)),
            block(&ph, &s3 + &one, &s5 + &s3, &(&pss - &(&s * &s3)) + &(&s * &two)),
        );
        push(
            format!("sqrt(sqrt15{m}psi*) sqrt(sqrt10{p}sqrt(phi*)) = phi/(2^(7/4) 5^(1/4)) sqrt(sqrt3-1) sqrt(sqrt5-sqrt3) (sqrt3+2{p}psi*)"),
            roots(&s15 - &(&s * &pss), &s10 + &(&s * &rphs)),
            block(&ph, &s3 - &one, &s5 - &s3, &(&s3 + &two) + &(&s * &pss)),
        );
    }

    let prod3 = |a: TowerElement, b: TowerElement, c: TowerElement| {
        pp(a).times(b, Rational::one()).times(c, Rational::one())
    };
    for u in [true, false] {
        let s = sgn(u);
        let (p, m) = (pm(u), mp(u));
        let two_s2 = &two * &s2;
        push(
            format!("2 sqrt2{p}sqrt3+1 = (sqrt2+1)(sqrt3{m}1)(sqrt3{p}sqrt2)"),
            pp(&(&two_s2 + &(&s * &s3)) + &one),
            prod3(&s2 + &one, &s3 - &s, &s3 + &(&s * &s2)),
        );
        push(
            format!("2 sqrt2{p}sqrt3-1 = (sqrt2-1)(sqrt3{p}1)(sqrt3{p}sqrt2)"),
            pp(&(&two_s2 + &(&s * &s3)) - &one),
            prod3(&s2 - &one, &s3 + &s, &s3 + &(&s * &s2)),
        );
        let two_s3 = &two * &s3;
        push(
            format!("2 sqrt3{p}sqrt5{p}1 = phi*/(2 sqrt5) (sqrt3{p}1)(sqrt5{p}sqrt3)"),
            pp(&(&two_s3 + &(&s * &s5)) + &s),
            over(prod3(phs.clone(), &s3 + &s, &s5 + &(&s * &s3)), 2, 5),
        );
        push(
            format!("2 sqrt3{p}sqrt5{m}1 = phi/(2 sqrt5) (sqrt3{m}1)(sqrt5{p}sqrt3)"),
            pp(&(&two_s3 + &(&s * &s5)) - &s),
            over(prod3(ph.clone(), &s3 - &s, &s5 + &(&s * &s3)), 2, 5),
        );
    }
    out
}

/// Results of every trigonometric table check.
#[derive(Clone, Debug, Default)]
pub struct LemmaReport {
    /// Per exponential entry: printed parts equal the tower point (squaring trick).
    pub exp_values: Vec<IdentityCheck>,
    /// Per exponential entry: `re^2 + im^2 = 1` exactly.
    pub pythagorean: Vec<(String, bool)>,
    /// Per exponential entry: `z^n = (-1)^k` exactly.
    pub root_of_unity: Vec<(String, bool)>,
    /// The product chain linking entries.
    pub products: Vec<(String, bool)>,
    /// Max deviation of printed parts from big-float cos/sin.
    pub max_numeric_deviation: f64,
    pub surd: Vec<IdentityCheck>,
    pub sines: Vec<IdentityCheck>,
}

impl LemmaReport {
    pub fn exp_table_ok(&self) -> bool {
        self.exp_values.iter().all(IdentityCheck::passes)
            && self.pythagorean.iter().all(|(_, ok)| *ok)
            && self.root_of_unity.iter().all(|(_, ok)| *ok)
            && self.products.iter().all(|(_, ok)| *ok)
    }

    pub fn surd_ok(&self) -> bool {
        self.surd.iter().all(IdentityCheck::passes)
    }

    pub fn sines_ok(&self) -> bool {
        self.sines.iter().all(IdentityCheck::passes)
    }

    /// Human-readable lines for every failed check.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for c in self.exp_values.iter().chain(&self.surd).chain(&self.sines) {
            if !c.passes() {
                out.push(format!("{}: {}", c.name, c.detail.clone().unwrap_or_default()));
            }
        }
        for (name, ok) in self.pythagorean.iter().chain(&self.root_of_unity).chain(&self.products) {
            if !ok {
                out.push(name.clone());
            }
        }
        out
    }
}

/// Point of the table at angle `k/n`, converted from its printed form.
fn printed_point(entry: &ExpEntry) -> Option<UnitCirclePoint> {
    Some(UnitCirclePoint {
        re: entry.re.to_tower().ok()?,
        im: entry.im.to_tower().ok()?,
        angle: Rational::new(entry.k, entry.n),
    })
}

/// Runs all checks; numeric comparisons use `digits` decimal digits.
pub fn verify_lemma_tables(digits: u32) -> LemmaReport {
    let prec = (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 32;
    let mut report = LemmaReport::default();
    let table = exp_table();
    let mut printed = Vec::new();
    for entry in &table {
        let label = entry.printed;
        let Ok(point) = exp_i_pi(entry.k, entry.n) else {
            report.exp_values.push(IdentityCheck {
                name: label.into(),
                exact: false,
                sign: false,
                deviation: f64::INFINITY,
                detail: Some("angle outside the tower".into()),
            });
            continue;
        };
        let re = IdentityCheck::squaring(format!("{label} [real part]"), &entry.re, &PowerProduct::of(point.re.clone()), prec);
        let im = IdentityCheck::squaring(format!("{label} [imaginary part]"), &entry.im, &PowerProduct::of(point.im.clone()), prec);
        report.exp_values.push(re);
        report.exp_values.push(im);

        let from_print = printed_point(entry);
        let circle = from_print.as_ref().is_some_and(UnitCirclePoint::is_on_circle);
        report.pythagorean.push((format!("{label}: re^2 + im^2 = 1"), circle));
        let unity = from_print.as_ref().is_some_and(|p| {
            let sign = if entry.k % 2 == 0 { 1 } else { -1 };
            let z = p.pow(entry.n);
            z.re == int(sign) && z.im.is_zero()
        });
        report.root_of_unity.push((format!("{label}: z^{} = (-1)^{}", entry.n, entry.k), unity));

        // independent big-float cos/sin
        let w = prec + 16;
        let x = Float::with_val(w, Constant::Pi) * entry.k / entry.n;
        let (sin, cos) = x.sin_cos(Float::new(w));
        for (part, reference) in [(&entry.re, cos), (&entry.im, sin)] {
            let dev = part
                .to_ball(prec)
                .map(|b| b.max_abs_deviation(&BigBall::exact(reference)))
                .unwrap_or(f64::INFINITY);
            report.max_numeric_deviation = report.max_numeric_deviation.max(dev);
        }
        if let Some(p) = from_print {
            printed.push(p);
        }
    }

    let lookup = |k: i64, n: i64| {
        let a = Rational::new(k, n);
        printed.iter().find(|p| p.angle == a).cloned()
    };
    for ((ka, na), (kb, nb)) in PRODUCT_CHAIN {
        let sum = &Rational::new(ka, na) + &Rational::new(kb, nb);
        let ok = match (lookup(ka, na), lookup(kb, nb)) {
            (Some(a), Some(b)) => {
                let expected = lookup(
                    sum.numer().to_i64().unwrap_or(0),
                    sum.denom().to_i64().unwrap_or(1),
                )
                .or_else(|| exp_i_pi(sum.numer().to_i64()?, sum.denom().to_i64()?).ok());
                expected.is_some_and(|e| a.mul(&b) == e)
            }
            _ => false,
        };
        report.products.push((format!("exp(i pi {ka}/{na}) exp(i pi {kb}/{nb}) = exp(i pi {sum})"), ok));
    }

    report.surd = surd_identities()
        .iter()
        .map(|s| IdentityCheck::squaring(s.printed.clone(), &s.lhs, &s.rhs, prec))
        .collect();
    report.sines = certify_sine_table(prec);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use crate::trig::product::monomial_product;
    use crate::trig::sines::sin_pi_exact;

    #[test]
    fn counts() {
        assert_eq!(exp_table().len(), 18);
        assert_eq!(surd_identities().len(), 32);
    }

    #[test]
    fn all_tables_verify() {
        let r = verify_lemma_tables(100);
        assert!(r.exp_table_ok(), "{:?}", r.failures());
        assert!(r.surd_ok(), "{:?}", r.failures());
        assert!(r.sines_ok(), "{:?}", r.failures());
        assert!(r.max_numeric_deviation < 1e-95, "{}", r.max_numeric_deviation);
    }

    #[test]
    fn printed_sign_slip_is_caught() {
        // psi* - sqrt3 < 0, so this reading of Im exp(2 i pi/15) fails the sign check
        let wrong = over(pp(phi() * (psi_star() - sqrt3())), 8, 5);
        let point = exp_i_pi(2, 15).unwrap();
        let c = IdentityCheck::squaring("slip", &wrong, &PowerProduct::of(point.im), 200);
        assert!(c.exact && !c.sign);
    }

    #[test]
    fn sine_7_60_matches_printed_surd() {
        // sin(7 pi/60) = (sqrt3 + 1)(sqrt3 + psi* - 2) phi / (8 sqrt10)
        let printed = over(pp(phi() * (sqrt3() + int(1)) * (sqrt3() + psi_star() - int(2))), 8, 10);
        let exact = monomial_product(&sin_pi_exact(&q(7, 60)).unwrap()).unwrap();
        assert!(IdentityCheck::squaring("7/60", &exact, &printed, 400).passes());
    }

    #[test]
    fn pythagorean_example_eighth() {
        let e = &exp_table()[4];
        let p = printed_point(e).unwrap();
        assert!(p.is_on_circle());
    }
}
