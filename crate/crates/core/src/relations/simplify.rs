//! Reduction of single gamma values and of gamma terms to canonical monomials.

use std::collections::BTreeMap;

use rug::Integer;

use super::extension::extension_table;
use super::relation::shift_normalize;
use super::table::hardcoded_table;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::rational::Rational;
use crate::trig::circle::supported_denominator;

fn check_denominator(x: &Rational) -> Result<()> {
    let d = x.denom();
    if supported_denominator(d) || Integer::from(120) % d == 0 {
        Ok(())
    } else {
        Err(Error::UnsupportedDenominator(d.to_string()))
    }
}

fn lookup(z: &Rational) -> Result<Monomial> {
    let found = if supported_denominator(z.denom()) {
        hardcoded_table().get(z).cloned()
    } else {
        extension_table()?.get(z).cloned()
    };
    found.ok_or_else(|| Error::UnsupportedDenominator(z.denom().to_string()))
}

/// `|Gamma(x)|` as a monomial, and whether `Gamma(x)` is negative.
pub fn reduce_signed(x: &Rational) -> Result<(bool, Monomial)> {
    if x.is_integer() && !x.is_positive() {
        return Err(Error::Pole(x.to_string()));
    }
    check_denominator(x)?;
    let (z, c) = shift_normalize(x)?;
    let base = match z {
        Some(z) => lookup(&z)?,
        None => Monomial::unit(),
    };
    Ok((c.is_negative(), base.mul(&Monomial::rational(&c.abs())?)))
}

/// `Gamma(x)` as a monomial over the basis (and extension) symbols.
/// Negative values (`x` in `(-2k-1, -2k)`) are reported as [`Error::NegativeValue`].
pub fn reduce(x: &Rational) -> Result<Monomial> {
    match reduce_signed(x)? {
        (false, m) => Ok(m),
        (true, _) => Err(Error::NegativeValue(format!("Gamma({x})"))),
    }
}

/// `prod Gamma(a)^e`. Negative gamma values may appear with integer exponents
/// as long as the whole product is positive. Factors are merged and taken in
/// argument order, so numeric tails do not depend on the input order.
pub fn simplify_gamma_term(factors: &[(Rational, Rational)]) -> Result<Monomial> {
    let mut merged: BTreeMap<Rational, Rational> = BTreeMap::new();
    for (a, e) in factors {
        *merged.entry(a.clone()).or_insert_with(Rational::zero) += e;
    }
    let mut acc = Monomial::unit();
    let mut negative = false;
    for (a, e) in &merged {
        if e.is_zero() {
            // still reject poles and unsupported points
            reduce_signed(a)?;
            continue;
        }
        let (neg, m) = reduce_signed(a)?;
        if neg && !e.is_zero() {
            if !e.is_integer() {
                return Err(Error::NegativeValue(format!("Gamma({a})^{e}")));
            }
            if e.numer().is_odd() {
                negative = !negative;
            }
        }
        acc = acc.mul(&m.pow(e));
    }
    if negative {
        return Err(Error::NegativeValue("gamma term".into()));
    }
    Ok(acc)
}

/// True iff no gamma symbol and no power of pi remain. Only a syntactic check:
/// transcendence of the remaining factors is not asserted.
pub fn is_gamma_free(m: &Monomial) -> bool {
    m.is_gamma_free()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&q(2, 3)).unwrap(), Monomial::from_dsl("2 pi 3^-1/2 G(1/3)^-1").unwrap());
        assert_eq!(reduce(&q(1, 2)).unwrap(), Monomial::pi_pow(q(1, 2)));
        assert_eq!(reduce(&q(7, 3)).unwrap(), Monomial::from_dsl("4/9 G(1/3)").unwrap());
        assert_eq!(reduce(&q(4, 1)).unwrap(), Monomial::rational(&q(6, 1)).unwrap());
        assert!(matches!(reduce(&q(0, 1)), Err(Error::Pole(_))));
        assert!(matches!(reduce(&q(-3, 1)), Err(Error::Pole(_))));
        assert!(matches!(reduce(&q(-1, 2)), Err(Error::NegativeValue(_))));
        assert_eq!(reduce(&q(-3, 2)).unwrap(), Monomial::from_dsl("4/3 pi^1/2").unwrap());
        let e = reduce(&q(1, 7)).unwrap_err();
        assert_eq!(e.to_string(), "unsupported denominator 7");
    }

    #[test]
    fn gamma_terms() {
        let r = simplify_gamma_term(&[(q(1, 3), q(1, 1)), (q(2, 3), q(1, 1))]).unwrap();
        assert_eq!(r, Monomial::from_dsl("2 pi 3^-1/2").unwrap());
        let r = simplify_gamma_term(&[(q(1, 2), q(1, 1)), (q(2, 3), q(1, 1)), (q(3, 4), q(-1, 1)), (q(5, 12), q(-1, 1))]).unwrap();
        assert_eq!(r, Monomial::from_dsl("sqrt3+1^1/2 2^-1/4 3^-3/8").unwrap());
        assert!(is_gamma_free(&r));
        assert!(simplify_gamma_term(&[]).unwrap().is_unit());
        // Gamma(-1/2)^2 is positive
        assert!(simplify_gamma_term(&[(q(-1, 2), q(2, 1))]).is_ok());
        assert!(simplify_gamma_term(&[(q(-1, 2), q(1, 1))]).is_err());
        assert!(!is_gamma_free(&reduce(&q(2, 3)).unwrap()));
    }
}
