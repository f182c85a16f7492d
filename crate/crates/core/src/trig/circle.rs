//! Exact points `exp(i pi x)` on the unit circle for `x` a multiple of `1/120`.
//!
//! Every such point is a product of powers of three seeds:
//! `exp(i pi/3)`, `exp(i pi/8)` and `exp(i pi/5)`, since
//! `40a + 15b + 24c` runs over all residues mod 240.

use std::collections::HashMap;
use std::fmt;
use std::sync::{LazyLock, Mutex};

use rug::Integer;

use super::tower::{consts::*, TowerElement};
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitCirclePoint {
    pub re: TowerElement,
    pub im: TowerElement,
    /// `x` in `exp(i pi x)`, reduced to `[0, 2)`.
    pub angle: Rational,
}

fn reduce_angle(x: &Rational) -> Rational {
    let two = Rational::from_int(2);
    let k = Rational::from((x / &two).floor());
    x - &(&k * &two)
}

impl UnitCirclePoint {
    pub fn one() -> Self {
        UnitCirclePoint { re: TowerElement::one(), im: TowerElement::zero(), angle: Rational::zero() }
    }

    pub fn mul(&self, other: &UnitCirclePoint) -> UnitCirclePoint {
        let re = &(&self.re * &other.re) - &(&self.im * &other.im);
        let im = &(&self.re * &other.im) + &(&self.im * &other.re);
        UnitCirclePoint { re, im, angle: reduce_angle(&(&self.angle + &other.angle)) }
    }

    pub fn conj(&self) -> UnitCirclePoint {
        UnitCirclePoint { re: self.re.clone(), im: -&self.im, angle: reduce_angle(&-&self.angle) }
    }

    pub fn pow(&self, n: i64) -> UnitCirclePoint {
        let base = if n < 0 { self.conj() } else { self.clone() };
        let mut acc = UnitCirclePoint::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `re^2 + im^2 = 1`, exactly.
    pub fn is_on_circle(&self) -> bool {
        (&(&self.re * &self.re) + &(&self.im * &self.im)) == TowerElement::one()
    }
}

impl fmt::Display for UnitCirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(i pi {}) = [{}] + i [{}]", self.angle, self.re, self.im)
    }
}

struct Seeds {
    third: Vec<UnitCirclePoint>,
    eighth: Vec<UnitCirclePoint>,
    fifth: Vec<UnitCirclePoint>,
}

static SEEDS: LazyLock<Seeds> = LazyLock::new(|| {
    let point = |re, im, n| UnitCirclePoint { re, im, angle: Rational::new(1, n) };
    // cos(pi/8) = sqrt(2+sqrt2)/2, sin(pi/8) = sqrt2 / (2 sqrt(2+sqrt2))
    let s = sqrt_2_plus_sqrt2();
    let e8 = point(rat(1, 2) * &s, sqrt2().div(&(int(2) * &s)).expect("nonzero"), 8);
    // cos(pi/5) = (1+sqrt5)/4, sin(pi/5) = sqrt10 / (2 sqrt(phi))
    let e5 = point(
        rat(1, 4) * (int(1) + sqrt5()),
        sqrt10().div(&(int(2) * sqrt_phi())).expect("nonzero"),
        5,
    );
    let e3 = point(rat(1, 2), rat(1, 2) * sqrt3(), 3);
    let powers = |e: &UnitCirclePoint, n: usize| {
        let mut v = vec![UnitCirclePoint::one()];
        for i in 1..n {
            let next = v[i - 1].mul(e);
            v.push(next);
        }
        v
    };
    Seeds { third: powers(&e3, 6), eighth: powers(&e8, 16), fifth: powers(&e5, 10) }
});

static CACHE: LazyLock<Mutex<HashMap<i64, UnitCirclePoint>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// `exp(i pi m / 120)`.
fn point_120(m: i64) -> UnitCirclePoint {
    let m = m.rem_euclid(240);
    if let Some(p) = CACHE.lock().expect("cache lock").get(&m) {
        return p.clone();
    }
    let mut best = None;
    for a in 0..6i64 {
        for b in 0..16i64 {
            for c in 0..10i64 {
                if (40 * a + 15 * b + 24 * c - m).rem_euclid(240) == 0 && best.is_none_or(|(x, y, z)| a + b + c < x + y + z) {
                    best = Some((a, b, c));
                }
            }
        }
    }
    let (a, b, c) = best.expect("seed exponents exist for every residue");
    let s = &*SEEDS;
    let p = s.third[a as usize].mul(&s.eighth[b as usize]).mul(&s.fifth[c as usize]);
    let p = UnitCirclePoint { angle: Rational::new(m, 120), ..p };
    CACHE.lock().expect("cache lock").insert(m, p.clone());
    p
}

/// `exp(i pi x)` for any `x` with denominator dividing 120.
pub fn exp_i_pi_120(x: &Rational) -> Result<UnitCirclePoint> {
    let scaled = x * 120;
    if !scaled.is_integer() {
        return Err(Error::UnsupportedDenominator(x.denom().to_string()));
    }
    let m = scaled.to_i64().ok_or_else(|| Error::Domain(format!("angle {x} too large")))?;
    Ok(point_120(m))
}

/// True when `n` divides 24 or 60.
pub fn supported_denominator(n: &Integer) -> bool {
    *n != 0 && (Integer::from(24) % n == 0 || Integer::from(60) % n == 0)
}

/// `exp(i pi k/n)` for `n` dividing 24 or 60.
pub fn exp_i_pi(k: i64, n: i64) -> Result<UnitCirclePoint> {
    let x = Rational::checked_new(k, n)?;
    if !supported_denominator(x.denom()) {
        return Err(Error::UnsupportedDenominator(x.denom().to_string()));
    }
    exp_i_pi_120(&x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn simple_points() {
        let p = exp_i_pi(1, 2).unwrap();
        assert_eq!(p.re, TowerElement::zero());
        assert_eq!(p.im, TowerElement::one());
        let p = exp_i_pi(1, 5).unwrap();
        // real part phi / (4 sqrt5)
        assert_eq!(p.re, phi().div(&(int(4) * sqrt5())).unwrap());
        assert_eq!(p.im, (phi() * psi_star()).div(&(int(4) * sqrt5())).unwrap());
        assert!(p.is_on_circle());
        assert_eq!(exp_i_pi(1, 4).unwrap().re, sqrt2().scale(&q(1, 2)));
    }

    #[test]
    fn unsupported() {
        assert!(matches!(exp_i_pi(1, 7), Err(Error::UnsupportedDenominator(_))));
        assert!(matches!(exp_i_pi(1, 40), Err(Error::UnsupportedDenominator(_))));
        assert!(exp_i_pi_120(&q(1, 40)).is_ok());
    }

    #[test]
    fn full_turn_and_numeric() {
        let p = exp_i_pi_120(&q(1, 120)).unwrap();
        assert!(p.is_on_circle());
        let c = p.re.to_ball(200).mid_f64();
        assert!((c - (std::f64::consts::PI / 120.0).cos()).abs() < 1e-15);
        assert_eq!(p.pow(240), UnitCirclePoint::one());
    }
}
