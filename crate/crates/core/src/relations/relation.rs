//! Reflection, multiplication and shift relations as log-linear equations
//! `prod Gamma(a)^e_a = rhs` with arguments folded into `(0, 1)`.

use std::collections::BTreeMap;
use std::fmt;

use rug::Integer;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, TAIL_BITS};
use crate::numeric::BigBall;
use crate::rational::Rational;
use crate::trig::circle::supported_denominator;
use crate::trig::sines::sin_pi_exact;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationKind {
    Reflection(Rational),
    Multiplication(u32, Rational),
    Shift(Rational),
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationKind::Reflection(x) => write!(f, "R({x})"),
            RelationKind::Multiplication(n, x) => write!(f, "M{n}({x})"),
            RelationKind::Shift(x) => write!(f, "S({x})"),
        }
    }
}

pub type Exponents = BTreeMap<Rational, Rational>;

#[derive(Clone, Debug, PartialEq)]
pub struct FunctionalRelation {
    pub kind: RelationKind,
    /// Gamma argument to exponent.
    pub lhs: Exponents,
    /// Gamma-free right-hand side.
    pub rhs: Monomial,
}

/// `Gamma(y) = c Gamma(z)` with `z` in `(0, 1)`, or `Gamma(y) = c` when `y` is a
/// positive integer (`z = None`). `c` is negative for some negative `y`.
pub fn shift_normalize(y: &Rational) -> Result<(Option<Rational>, Rational)> {
    if y.is_integer() && !y.is_positive() {
        return Err(Error::Pole(y.to_string()));
    }
    let one = Rational::one();
    let mut z = y.clone();
    let mut c = Rational::one();
    while z > one {
        z -= &one;
        c *= &z;
    }
    while !z.is_positive() {
        c = &c / &z;
        z += &one;
    }
    Ok(if z == one { (None, c) } else { (Some(z), c) })
}

fn bump(map: &mut Exponents, key: Rational, by: &Rational) {
    let e = map.entry(key.clone()).or_insert_with(Rational::zero);
    *e += by;
    if e.is_zero() {
        map.remove(&key);
    }
}

fn check_unit_interval(x: &Rational) -> Result<()> {
    if !x.is_positive() || *x >= Rational::one() {
        return Err(Error::Domain(format!("relation argument {x} outside (0, 1)")));
    }
    Ok(())
}

/// `sin(pi x)` as a monomial: exact for denominators dividing 24 or 60, a
/// ball tail for the other divisors of 120.
pub fn sin_monomial(x: &Rational) -> Result<Monomial> {
    if supported_denominator(x.denom()) {
        return sin_pi_exact(x);
    }
    if Integer::from(120) % x.denom() != 0 {
        return Err(Error::UnsupportedDenominator(x.denom().to_string()));
    }
    check_unit_interval(x)?;
    Monomial::from_tail(BigBall::sin_pi(TAIL_BITS, x))
}

/// Left-hand side of `R(x)`: `Gamma(x) Gamma(1 - x)`.
pub fn reflection_lhs(x: &Rational) -> Result<Exponents> {
    check_unit_interval(x)?;
    let mut lhs = Exponents::new();
    let one = Rational::one();
    bump(&mut lhs, x.clone(), &one);
    bump(&mut lhs, &one - x, &one);
    Ok(lhs)
}

/// Left-hand side of `M_n(x)` after shift normalization, and the rational
/// factor `c` with `prod Gamma(x + i/n) / Gamma(nx) = c prod Gamma(lhs)`.
pub fn multiplication_lhs(n: u32, x: &Rational) -> Result<(Exponents, Rational)> {
    check_unit_interval(x)?;
    if n < 2 {
        return Err(Error::Domain(format!("multiplication formula needs n >= 2, got {n}")));
    }
    let one = Rational::one();
    let mut lhs = Exponents::new();
    let mut c = Rational::one();
    for i in 0..n {
        let y = x + &Rational::new(i64::from(i), i64::from(n));
        let (z, ci) = shift_normalize(&y)?;
        c *= &ci;
        if let Some(z) = z {
            bump(&mut lhs, z, &one);
        }
    }
    let (z, cn) = shift_normalize(&(x * i64::from(n)))?;
    c = &c / &cn;
    if let Some(z) = z {
        bump(&mut lhs, z, &-&one);
    }
    Ok((lhs, c))
}

impl FunctionalRelation {
    /// `Gamma(x) Gamma(1 - x) = pi / sin(pi x)`.
    pub fn reflection(x: &Rational) -> Result<Self> {
        let lhs = reflection_lhs(x)?;
        let rhs = Monomial::pi_pow(Rational::one()).div(&sin_monomial(x)?);
        Ok(FunctionalRelation { kind: RelationKind::Reflection(x.clone()), lhs, rhs })
    }

    /// `prod_i Gamma(x + i/n) = (2 pi)^((n-1)/2) n^(1/2 - nx) Gamma(nx)`.
    pub fn multiplication(n: u32, x: &Rational) -> Result<Self> {
        let (lhs, c) = multiplication_lhs(n, x)?;
        let n_rat = Rational::from_int(i64::from(n));
        let half_n1 = Rational::new(i64::from(n) - 1, 2);
        let rhs = Monomial::rational_pow(&Rational::from_int(2), &half_n1)?
            .mul(&Monomial::pi_pow(half_n1))
            .mul(&Monomial::rational_pow(&n_rat, &(&Rational::new(1, 2) - &(x * i64::from(n))))?)
            .div(&Monomial::rational(&c)?);
        Ok(FunctionalRelation { kind: RelationKind::Multiplication(n, x.clone()), lhs, rhs })
    }

    /// `Gamma(x + 1) = x Gamma(x)` for `x > 0`.
    pub fn shift(x: &Rational) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::Domain(format!("shift relation needs x > 0, got {x}")));
        }
        let mut lhs = Exponents::new();
        bump(&mut lhs, x + 1, &Rational::one());
        bump(&mut lhs, x.clone(), &-Rational::one());
        Ok(FunctionalRelation { kind: RelationKind::Shift(x.clone()), lhs, rhs: Monomial::rational(x)? })
    }

    /// `prod assign(a)^e_a / rhs`; the unit monomial when the assignment satisfies the relation.
    pub fn residual<F>(&self, assign: F) -> Result<Monomial>
    where
        F: Fn(&Rational) -> Result<Monomial>,
    {
        let mut acc = self.rhs.inv();
        for (a, e) in &self.lhs {
            acc = acc.mul(&assign(a)?.pow(e));
        }
        Ok(acc)
    }
}

impl fmt::Display for FunctionalRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .lhs
            .iter()
            .map(|(a, e)| if e.is_one() { format!("Gamma({a})") } else { format!("Gamma({a})^{e}") })
            .collect();
        write!(f, "{}: {} = {}", self.kind, parts.join(" * "), self.rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn normalization() {
        assert_eq!(shift_normalize(&q(7, 3)).unwrap(), (Some(q(1, 3)), q(4, 9)));
        assert_eq!(shift_normalize(&q(3, 1)).unwrap(), (None, q(2, 1)));
        assert_eq!(shift_normalize(&q(-1, 2)).unwrap(), (Some(q(1, 2)), q(-2, 1)));
        assert!(matches!(shift_normalize(&q(-2, 1)), Err(Error::Pole(_))));
    }

    #[test]
    fn reflection_half() {
        let r = FunctionalRelation::reflection(&q(1, 2)).unwrap();
        assert_eq!(r.lhs.get(&q(1, 2)), Some(&q(2, 1)));
        assert_eq!(r.rhs, Monomial::pi_pow(q(1, 1)));
    }

    #[test]
    fn duplication_at_quarter() {
        // Gamma(1/4) Gamma(3/4) / Gamma(1/2) = 2^(1/2) pi^(1/2) 2^0
        let r = FunctionalRelation::multiplication(2, &q(1, 4)).unwrap();
        assert_eq!(r.lhs.len(), 3);
        assert_eq!(r.lhs.get(&q(1, 2)), Some(&q(-1, 1)));
        assert_eq!(r.rhs, Monomial::from_dsl("2^1/2 pi^1/2").unwrap());
    }

    #[test]
    fn folded_arguments() {
        // M3(1/2): Gamma(1/2) Gamma(5/6) Gamma(7/6) = 2 pi 3^-1 Gamma(3/2)
        let (lhs, c) = multiplication_lhs(3, &q(1, 2)).unwrap();
        assert_eq!(lhs.get(&q(1, 6)), Some(&q(1, 1)));
        assert_eq!(lhs.get(&q(5, 6)), Some(&q(1, 1)));
        assert!(!lhs.contains_key(&q(1, 2)));
        assert_eq!(c, q(1, 3));
    }

    #[test]
    fn tail_sine() {
        let m = sin_monomial(&q(1, 40)).unwrap();
        assert!(m.tail().is_some());
        assert!(matches!(sin_monomial(&q(1, 7)), Err(Error::UnsupportedDenominator(_))));
    }
}
