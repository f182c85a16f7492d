//! Midpoint-radius balls over MPFR floats.
//!
//! The midpoint carries the working precision; the radius is a 64-bit float that
//! is only ever rounded upward. Each operation adds the rounding error of its
//! midpoint (one ulp when MPFR reports an inexact result).

use std::cmp::Ordering;
use std::fmt;

use rug::float::{Constant, Round};
use rug::ops::{AddAssignRound, DivAssignRound, MulAssignRound, SubAssignRound};
use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::rational::Rational;

const RAD_PREC: u32 = 64;

#[derive(Clone, Debug)]
pub struct BigBall {
    mid: Float,
    rad: Float,
}

fn zero_rad() -> Float {
    Float::new(RAD_PREC)
}

/// Upper bound for `|x|` at radius precision.
fn mag_up(x: &Float) -> Float {
    Float::with_val_round(RAD_PREC, x.abs_ref(), Round::Up).0
}

/// Lower bound for `|x|` at radius precision.
fn mag_down(x: &Float) -> Float {
    Float::with_val_round(RAD_PREC, x.abs_ref(), Round::Down).0
}

fn ulp_error(x: &Float, o: Ordering) -> Float {
    if o == Ordering::Equal {
        return zero_rad();
    }
    let mut e = mag_up(x);
    e >>= x.prec() - 1;
    e
}

fn add_up(a: &Float, b: &Float) -> Float {
    let mut r = Float::with_val(RAD_PREC, a);
    r.add_assign_round(b, Round::Up);
    r
}

fn mul_up(a: &Float, b: &Float) -> Float {
    let mut r = Float::with_val(RAD_PREC, a);
    r.mul_assign_round(b, Round::Up);
    r
}

fn div_up(a: &Float, b: &Float) -> Float {
    let mut r = Float::with_val(RAD_PREC, a);
    r.div_assign_round(b, Round::Up);
    r
}

fn sub_down(a: &Float, b: &Float) -> Float {
    let mut r = Float::with_val_round(RAD_PREC, a, Round::Down).0;
    r.sub_assign_round(b, Round::Down);
    r
}

impl BigBall {
    pub fn exact(mid: Float) -> Self {
        BigBall { mid, rad: zero_rad() }
    }

    /// Ball with a given midpoint and radius; the radius is rounded up.
    pub fn with_radius(mid: Float, rad: &Float) -> Self {
        let rad = Float::with_val_round(RAD_PREC, rad.abs_ref(), Round::Up).0;
        BigBall { mid, rad }
    }

    pub fn from_int(prec: u32, n: i64) -> Self {
        let (mid, o) = Float::with_val_round(prec, n, Round::Nearest);
        let rad = ulp_error(&mid, o);
        BigBall { mid, rad }
    }

    pub fn from_integer(prec: u32, n: &Integer) -> Self {
        let (mid, o) = Float::with_val_round(prec, n, Round::Nearest);
        let rad = ulp_error(&mid, o);
        BigBall { mid, rad }
    }

    pub fn from_rational(prec: u32, r: &Rational) -> Self {
        let (mid, o) = Float::with_val_round(prec, r.as_gmp(), Round::Nearest);
        let rad = ulp_error(&mid, o);
        BigBall { mid, rad }
    }

    pub fn one(prec: u32) -> Self {
        BigBall::from_int(prec, 1)
    }

    pub fn pi(prec: u32) -> Self {
        let (mid, o) = Float::with_val_round(prec, Constant::Pi, Round::Nearest);
        let rad = ulp_error(&mid, o);
        BigBall { mid, rad }
    }

    pub fn mid(&self) -> &Float {
        &self.mid
    }

    pub fn rad(&self) -> &Float {
        &self.rad
    }

    pub fn prec(&self) -> u32 {
        self.mid.prec()
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    pub fn rad_f64(&self) -> f64 {
        // 64-bit radius rounded up into f64
        Float::with_val_round(53, &self.rad, Round::Up).0.to_f64()
    }

    /// Lower endpoint, rounded down to radius precision.
    pub fn lower(&self) -> Float {
        let mut r = Float::with_val_round(RAD_PREC, &self.mid, Round::Down).0;
        r.sub_assign_round(&self.rad, Round::Down);
        r
    }

    /// Upper endpoint, rounded up to radius precision.
    pub fn upper(&self) -> Float {
        let mut r = Float::with_val_round(RAD_PREC, &self.mid, Round::Up).0;
        r.add_assign_round(&self.rad, Round::Up);
        r
    }

    /// Lower endpoint at midpoint precision, rounded down.
    pub fn lower_full(&self) -> Float {
        Float::with_val_round(self.prec(), &self.mid - &self.rad, Round::Down).0
    }

    /// Upper endpoint at midpoint precision, rounded up.
    pub fn upper_full(&self) -> Float {
        Float::with_val_round(self.prec(), &self.mid + &self.rad, Round::Up).0
    }

    /// Smallest ball containing `[lo, hi]`.
    pub fn from_endpoints(lo: &Float, hi: &Float) -> Self {
        let prec = lo.prec().max(hi.prec());
        let (mid, o) = Float::with_val_round(prec + 1, lo + hi, Round::Nearest);
        let mut mid = mid;
        mid >>= 1;
        let mut width = Float::with_val_round(RAD_PREC, hi - lo, Round::Up).0;
        width >>= 1;
        let (mid_r, o2) = Float::with_val_round(prec, &mid, Round::Nearest);
        let rad = add_up(&add_up(&width, &ulp_error(&mid, o)), &ulp_error(&mid_r, o2));
        BigBall { mid: mid_r, rad }
    }

    pub fn is_positive(&self) -> bool {
        self.lower() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.upper() < 0
    }

    pub fn contains_zero(&self) -> bool {
        !self.is_positive() && !self.is_negative()
    }

    /// Rounds the midpoint to `prec` bits, folding the error into the radius.
    pub fn round_to(&self, prec: u32) -> Self {
        let (mid, o) = Float::with_val_round(prec, &self.mid, Round::Nearest);
        let rad = add_up(&self.rad, &ulp_error(&mid, o));
        BigBall { mid, rad }
    }

    /// Widens the radius by `extra`.
    pub fn inflate(&self, extra: &Float) -> Self {
        BigBall {
            mid: self.mid.clone(),
            rad: add_up(&self.rad, &mag_up(extra)),
        }
    }

    fn prec2(&self, other: &BigBall) -> u32 {
        self.prec().max(other.prec())
    }

    pub fn add(&self, other: &BigBall) -> Self {
        let (mid, o) = Float::with_val_round(self.prec2(other), &self.mid + &other.mid, Round::Nearest);
        let rad = add_up(&add_up(&self.rad, &other.rad), &ulp_error(&mid, o));
        BigBall { mid, rad }
    }

    pub fn sub(&self, other: &BigBall) -> Self {
        let (mid, o) = Float::with_val_round(self.prec2(other), &self.mid - &other.mid, Round::Nearest);
        let rad = add_up(&add_up(&self.rad, &other.rad), &ulp_error(&mid, o));
        BigBall { mid, rad }
    }

    pub fn neg(&self) -> Self {
        BigBall {
            mid: Float::with_val(self.prec(), -&self.mid),
            rad: self.rad.clone(),
        }
    }

    pub fn abs(&self) -> Self {
        BigBall {
            mid: Float::with_val(self.prec(), self.mid.abs_ref()),
            rad: self.rad.clone(),
        }
    }

    pub fn mul(&self, other: &BigBall) -> Self {
        let (mid, o) = Float::with_val_round(self.prec2(other), &self.mid * &other.mid, Round::Nearest);
        let mut rad = mul_up(&mag_up(&self.mid), &other.rad);
        rad = add_up(&rad, &mul_up(&mag_up(&other.mid), &self.rad));
        rad = add_up(&rad, &mul_up(&self.rad, &other.rad));
        rad = add_up(&rad, &ulp_error(&mid, o));
        BigBall { mid, rad }
    }

    pub fn mul_rational(&self, r: &Rational) -> Self {
        self.mul(&BigBall::from_rational(self.prec(), r))
    }

    pub fn div(&self, other: &BigBall) -> Result<Self> {
        let denom_low = sub_down(&mag_down(&other.mid), &other.rad);
        if denom_low <= 0 {
            return Err(Error::DivisionByZero);
        }
        let (mid, o) = Float::with_val_round(self.prec2(other), &self.mid / &other.mid, Round::Nearest);
        let num = add_up(&self.rad, &mul_up(&mag_up(&mid), &other.rad));
        let rad = add_up(&div_up(&num, &denom_low), &ulp_error(&mid, o));
        Ok(BigBall { mid, rad })
    }

    pub fn recip(&self) -> Result<Self> {
        BigBall::one(self.prec()).div(self)
    }

    pub fn sqr(&self) -> Self {
        self.mul(self)
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.upper() < 0 {
            return Err(Error::Domain("square root of a negative ball".into()));
        }
        let low = self.lower();
        if low <= 0 {
            // hull [0, sqrt(upper)]
            let top = Float::with_val_round(RAD_PREC, self.upper().sqrt_ref(), Round::Up).0;
            let mut mid = Float::with_val(self.prec(), &top);
            mid >>= 1;
            let mut rad = top;
            rad >>= 1;
            rad = add_up(&rad, &ulp_error(&mid, Ordering::Less));
            return Ok(BigBall { mid, rad });
        }
        let (mid, o) = Float::with_val_round(self.prec(), self.mid.sqrt_ref(), Round::Nearest);
        let root_low = Float::with_val_round(RAD_PREC, low.sqrt_ref(), Round::Down).0;
        let rad = add_up(&div_up(&self.rad, &root_low), &ulp_error(&mid, o));
        Ok(BigBall { mid, rad })
    }

    pub fn exp(&self) -> Self {
        let (mid, o) = Float::with_val_round(self.prec(), self.mid.exp_ref(), Round::Nearest);
        let e_up = Float::with_val_round(RAD_PREC, self.upper().exp_ref(), Round::Up).0;
        let em1 = Float::with_val_round(RAD_PREC, self.rad.exp_m1_ref(), Round::Up).0;
        let rad = add_up(&mul_up(&e_up, &em1), &ulp_error(&mid, o));
        BigBall { mid, rad }
    }

    pub fn ln(&self) -> Result<Self> {
        let low = self.lower();
        if low <= 0 {
            return Err(Error::Domain("logarithm of a non-positive ball".into()));
        }
        let (mid, o) = Float::with_val_round(self.prec(), self.mid.ln_ref(), Round::Nearest);
        let rad = add_up(&div_up(&self.rad, &low), &ulp_error(&mid, o));
        Ok(BigBall { mid, rad })
    }

    pub fn sin(&self) -> Self {
        let (mid, o) = Float::with_val_round(self.prec(), self.mid.sin_ref(), Round::Nearest);
        let rad = add_up(&self.rad, &ulp_error(&mid, o));
        BigBall { mid, rad }
    }

    pub fn cos(&self) -> Self {
        let (mid, o) = Float::with_val_round(self.prec(), self.mid.cos_ref(), Round::Nearest);
        let rad = add_up(&self.rad, &ulp_error(&mid, o));
        BigBall { mid, rad }
    }

    pub fn tanh(&self) -> Self {
        let (mid, o) = Float::with_val_round(self.prec(), self.mid.tanh_ref(), Round::Nearest);
        let rad = add_up(&self.rad, &ulp_error(&mid, o));
        BigBall { mid, rad }
    }

    /// `sin(pi x)` for rational `x`.
    pub fn sin_pi(prec: u32, x: &Rational) -> Self {
        BigBall::pi(prec + 16).mul_rational(x).sin().round_to(prec)
    }

    pub fn pow_int(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return self.pow_int(-n)?.recip();
        }
        let mut result = BigBall::one(self.prec());
        let mut base = self.clone();
        let mut k = n as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.sqr();
            }
        }
        Ok(result)
    }

    /// `self^e` for rational `e`; non-integer exponents need a positive ball.
    pub fn pow_rational(&self, e: &Rational) -> Result<Self> {
        if let Some(n) = e.to_i64() {
            return self.pow_int(n);
        }
        if !self.is_positive() {
            return Err(Error::Domain("fractional power of a non-positive ball".into()));
        }
        let exponent = BigBall::from_rational(self.prec(), e);
        Ok(self.ln()?.mul(&exponent).exp())
    }

    pub fn overlaps(&self, other: &BigBall) -> bool {
        let dist = Float::with_val_round(RAD_PREC, &self.mid - &other.mid, Round::Down).0;
        let dist = mag_down(&dist);
        dist <= add_up(&self.rad, &other.rad)
    }

    pub fn contains(&self, x: &Float) -> bool {
        self.overlaps(&BigBall::exact(x.clone()))
    }

    /// Upper bound on `|self - other|` over both balls.
    pub fn max_abs_deviation(&self, other: &BigBall) -> f64 {
        let d = Float::with_val_round(RAD_PREC, &self.mid - &other.mid, Round::Up).0;
        let r = add_up(&mag_up(&d), &add_up(&self.rad, &other.rad));
        Float::with_val_round(53, &r, Round::Up).0.to_f64()
    }

    /// Upper bound on `|self / reference - 1|` over both balls.
    pub fn max_rel_deviation(&self, reference: &BigBall) -> f64 {
        match self.div(reference) {
            Ok(q) => q.max_abs_deviation(&BigBall::one(q.prec())),
            Err(_) => f64::INFINITY,
        }
    }

    /// Decimal rendering of the midpoint with `digits` significant digits.
    pub fn mid_string(&self, digits: usize) -> String {
        format_float(&self.mid, digits)
    }

    pub fn rad_string(&self) -> String {
        format_float(&self.rad, 3)
    }
}

/// Scientific decimal string with `digits` significant digits, e.g. `1.7724e0`.
pub fn format_float(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    x.to_string_radix(10, Some(digits.max(1)))
}

impl PartialEq for BigBall {
    /// Structural equality of midpoint and radius.
    fn eq(&self, other: &Self) -> bool {
        self.mid == other.mid && self.rad == other.rad && self.prec() == other.prec()
    }
}

impl fmt::Display for BigBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = (f64::from(self.prec()) * std::f64::consts::LOG10_2) as usize;
        write!(f, "{} +/- {}", self.mid_string(digits), self.rad_string())
    }
}

/// Outcome of comparing two balls.
#[derive(Clone, Debug, PartialEq)]
pub enum Certification {
    /// The balls intersect; the value is the sum of both radii.
    IndistinguishableWithin(f64),
    /// The balls are disjoint, so the underlying values differ.
    ProvablyDistinct,
}

pub fn certify_equal(a: &BigBall, b: &BigBall) -> Certification {
    if a.overlaps(b) {
        let r = add_up(a.rad(), b.rad());
        Certification::IndistinguishableWithin(Float::with_val_round(53, &r, Round::Up).0.to_f64())
    } else {
        Certification::ProvablyDistinct
    }
}
