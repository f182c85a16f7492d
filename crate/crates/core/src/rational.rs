//! Exact rationals.
//!
//! A thin newtype over GMP rationals. The representation is always in lowest
//! terms with a positive denominator, which GMP maintains for us.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use rug::ops::Pow;
use rug::{Integer, Rational as Gmp};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(Gmp);

impl Rational {
    pub fn zero() -> Self {
        Rational(Gmp::new())
    }

    pub fn one() -> Self {
        Rational(Gmp::from(1))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(Gmp::from(n))
    }

    /// `num/den` in lowest terms. Panics when `den == 0`; use [`Rational::checked_new`]
    /// for untrusted input.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rational(Gmp::from((num, den)))
    }

    pub fn checked_new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(Gmp::from((num, den))))
    }

    pub fn from_integers(num: Integer, den: Integer) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(Gmp::from((num, den))))
    }

    pub fn from_gmp(q: Gmp) -> Self {
        Rational(q)
    }

    pub fn as_gmp(&self) -> &Gmp {
        &self.0
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.cmp0() == Ordering::Equal
    }

    pub fn is_one(&self) -> bool {
        *self.0.numer() == 1 && *self.0.denom() == 1
    }

    pub fn is_positive(&self) -> bool {
        self.0.cmp0() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.0.cmp0() == Ordering::Less
    }

    pub fn is_integer(&self) -> bool {
        *self.0.denom() == 1
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.clone().abs())
    }

    /// Multiplicative inverse; zero has none.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.clone().recip()))
    }

    pub fn floor(&self) -> Integer {
        let (_, floor) = self.0.clone().fract_floor(Integer::new());
        floor
    }

    /// Fractional part in `[0, 1)`.
    pub fn fract(&self) -> Self {
        let (fract, _) = self.0.clone().fract_floor(Integer::new());
        Rational(fract)
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Integer power, negative exponents allowed for nonzero bases.
    pub fn pow_i(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs();
        let n = u32::try_from(n).map_err(|_| Error::Domain(format!("exponent {e} too large")))?;
        let num = Integer::from(Pow::pow(base.numer(), n));
        let den = Integer::from(Pow::pow(base.denom(), n));
        Ok(Rational(Gmp::from((num, den))))
    }

    /// Always renders as `p/q`, including integers (`3/1`).
    pub fn to_fraction_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `k`, `k/n`, with an optional sign and surrounding whitespace.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let valid = |x: &str, signed: bool| {
            let digits = if signed {
                x.strip_prefix(['-', '+']).unwrap_or(x)
            } else {
                x
            };
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        };
        if !valid(num, true) || !valid(den, false) {
            return Err(bad());
        }
        let num: Integer = num.trim_start_matches('+').parse().map_err(|_| bad())?;
        let den: Integer = den.parse().map_err(|_| bad())?;
        Rational::from_integers(num, den)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<Integer> for Rational {
    fn from(n: Integer) -> Self {
        Rational(Gmp::from(n))
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(Gmp::from(&self.0 $op &rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl $tr<i64> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational(Gmp::from(&self.0 $op Gmp::from(rhs)))
            }
        }
        impl $tr<i64> for Rational {
            type Output = Rational;
            fn $method(self, rhs: i64) -> Rational {
                Rational(self.0 $op Gmp::from(rhs))
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div<&Rational> for &Rational {
    type Output = Rational;
    /// Panics on division by zero, like integer division.
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rational(Gmp::from(&self.0 / &rhs.0))
    }
}

impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        &self / &rhs
    }
}

impl Div<i64> for &Rational {
    type Output = Rational;
    fn div(self, rhs: i64) -> Rational {
        self / &Rational::from_int(rhs)
    }
}

impl Div<i64> for Rational {
    type Output = Rational;
    fn div(self, rhs: i64) -> Rational {
        &self / &Rational::from_int(rhs)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(Gmp::from(-&self.0))
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rational> for Rational {
    fn mul_assign(&mut self, rhs: &Rational) {
        self.0 *= &rhs.0;
    }
}

/// Shorthand for `Rational::new`, handy in tables and tests.
pub fn q(num: i64, den: i64) -> Rational {
    Rational::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &Integer::from(-3));
        assert_eq!(r.denom(), &Integer::from(2));
        assert_eq!(r.to_string(), "-3/2");
        assert_eq!(q(4, 2).to_string(), "2");
        assert_eq!(q(4, 2).to_fraction_string(), "2/1");
    }

    #[test]
    fn inverse_of_zero_is_an_error() {
        assert_eq!(Rational::zero().inv(), Err(Error::DivisionByZero));
        assert_eq!(q(-2, 3).inv().unwrap(), q(-3, 2));
    }

    #[test]
    fn parse() {
        assert_eq!("7/3".parse::<Rational>().unwrap(), q(7, 3));
        assert_eq!(" -1/12 ".parse::<Rational>().unwrap(), q(-1, 12));
        assert_eq!("+5".parse::<Rational>().unwrap(), q(5, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("a/2".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn floor_and_fract() {
        assert_eq!(q(7, 3).floor(), 2);
        assert_eq!(q(7, 3).fract(), q(1, 3));
        assert_eq!(q(-1, 3).floor(), -1);
        assert_eq!(q(-1, 3).fract(), q(2, 3));
    }

    #[test]
    fn powers() {
        assert_eq!(q(2, 3).pow_i(3).unwrap(), q(8, 27));
        assert_eq!(q(2, 3).pow_i(-2).unwrap(), q(9, 4));
        assert!(Rational::zero().pow_i(-1).is_err());
    }
}
