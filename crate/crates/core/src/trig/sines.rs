//! Exact `sin(pi x)` as monomials over the generators, for `x` with
//! denominator dividing 24 or 60.
//!
//! Values for `x` in `(0, 1/2]` are stored as data; `sin(pi x) = sin(pi (1 - x))`
//! covers the rest. Each stored entry is certified exactly against the tower
//! value of `Im exp(i pi x)` by [`certify_sine_table`].

use std::collections::BTreeMap;
use std::sync::LazyLock;

use super::circle::{exp_i_pi, supported_denominator};
use super::product::{monomial_product, IdentityCheck, PowerProduct};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::rational::Rational;

/// `(k, n, monomial)` with `sin(pi k/n)` equal to the monomial.
const SINE_TABLE: &[(i64, i64, &str)] = &[
    (1, 60, "2^5/4 5^3/4 sqrt3+1^-1/2 sqrt5+sqrt3^-1/2 phi^-1 sqrt15+psi^-1/2 sqrt10+sqrt(phi)^-1/2"),
    (1, 30, "2^3/2 5^1 phi^-3/2 sqrt15+psi^-1"),
    (1, 24, "2^-3/4 sqrt2+1^-1/2 sqrt3+1^-1/2 sqrt3+sqrt2^-1/2"),
    (1, 20, "5^1/2 phi^-1/2 sqrt10+sqrt(phi)^-1/2 sqrt10+sqrt(phi*)^-1/2"),
    (1, 15, "2^1/2 5^1/2 phi^-1/2 sqrt15+psi^-1/2 sqrt15+psi*^-1/2"),
    (1, 12, "2^-1/2 sqrt3+1^-1"),
    (1, 10, "5^1/2 phi^-1"),
    (7, 60, "2^-5/4 5^-1/4 sqrt3+1^1/2 sqrt5+sqrt3^-1/2 phi^1 sqrt15+psi*^-1/2 sqrt10+sqrt(phi*)^-1/2"),
    (1, 8, "2^-3/4 sqrt2+1^-1/2"),
    (2, 15, "2^-1 sqrt15+psi^-1/2 sqrt15+psi*^1/2"),
    (3, 20, "2^-1 sqrt10+sqrt(phi)^-1/2 sqrt10+sqrt(phi*)^1/2"),
    (1, 6, "2^-1"),
    (11, 60, "2^-5/4 5^-1/4 sqrt3+1^-1/2 sqrt5+sqrt3^-1/2 sqrt15+psi^1/2 sqrt10+sqrt(phi)^1/2"),
    (1, 5, "2^-1/2 5^1/2 phi^-1/2"),
    (5, 24, "2^-5/4 sqrt2+1^1/2 sqrt3+1^1/2 sqrt3+sqrt2^-1/2"),
    (13, 60, "2^-7/4 5^-1/4 sqrt3+1^-1/2 sqrt5+sqrt3^1/2 phi^1/2 sqrt15+psi*^1/2 sqrt10+sqrt(phi*)^-1/2"),
    (7, 30, "2^-3/2 5^-1/2 phi^3/2 sqrt15+psi*^-1"),
    (1, 4, "2^-1/2"),
    (4, 15, "2^-3/2 phi^-1/2 sqrt15+psi^1/2 sqrt15+psi*^1/2"),
    (17, 60, "2^-7/4 5^-1/4 sqrt3+1^1/2 sqrt5+sqrt3^-1/2 sqrt15+psi*^1/2 sqrt10+sqrt(phi*)^1/2"),
    (7, 24, "2^-5/4 sqrt2+1^-1/2 sqrt3+1^1/2 sqrt3+sqrt2^1/2"),
    (3, 10, "2^-2 5^-1/2 phi^1"),
    (19, 60, "2^-5/4 5^1/4 sqrt3+1^1/2 sqrt5+sqrt3^1/2 phi^-1/2 sqrt15+psi^1/2 sqrt10+sqrt(phi)^-1/2"),
    (1, 3, "2^-1 3^1/2"),
    (7, 20, "2^-2 5^-1/2 phi^1 sqrt10+sqrt(phi)^1/2 sqrt10+sqrt(phi*)^-1/2"),
    (11, 30, "2^-3/2 phi^-1/2 sqrt15+psi^1"),
    (3, 8, "2^-3/4 sqrt2+1^1/2"),
    (23, 60, "2^-5/4 5^-1/4 sqrt3+1^-1/2 sqrt5+sqrt3^1/2 phi^1/2 sqrt15+psi*^-1/2 sqrt10+sqrt(phi*)^1/2"),
    (2, 5, "2^-3/2 phi^1/2"),
    (5, 12, "2^-3/2 sqrt3+1^1"),
    (13, 30, "2^-5/2 5^-1/2 phi^1/2 sqrt15+psi*^1"),
    (9, 20, "2^-1 phi^-1/2 sqrt10+sqrt(phi)^1/2 sqrt10+sqrt(phi*)^1/2"),
    (11, 24, "2^-3/4 sqrt2+1^1/2 sqrt3+1^-1/2 sqrt3+sqrt2^1/2"),
    (7, 15, "2^-2 5^-1/2 phi^1 sqrt15+psi^1/2 sqrt15+psi*^-1/2"),
    (29, 60, "2^-3/4 5^1/4 sqrt3+1^1/2 sqrt5+sqrt3^1/2 phi^-1/2 sqrt15+psi^-1/2 sqrt10+sqrt(phi)^1/2"),
    (1, 2, ""),
];

static SINES: LazyLock<BTreeMap<Rational, Monomial>> = LazyLock::new(|| {
    SINE_TABLE
        .iter()
        .map(|&(k, n, src)| (Rational::new(k, n), Monomial::from_dsl(src).expect("valid sine table entry")))
        .collect()
});

/// `sin(pi x)` as an exact monomial, for `0 < x < 1` with denominator dividing 24 or 60.
pub fn sin_pi_exact(x: &Rational) -> Result<Monomial> {
    if !supported_denominator(x.denom()) {
        return Err(Error::UnsupportedDenominator(x.denom().to_string()));
    }
    if !x.is_positive() || *x >= Rational::one() {
        return Err(Error::Domain(format!("sin(pi x) is not positive at x = {x}")));
    }
    let half = Rational::new(1, 2);
    let key = if *x > half { Rational::one() - x } else { x.clone() };
    SINES.get(&key).cloned().ok_or_else(|| Error::NotMonomializable(format!("sin(pi {x})")))
}

/// All arguments in `(0, 1/2]` covered by the table.
pub fn sine_arguments() -> Vec<Rational> {
    SINES.keys().cloned().collect()
}

/// Checks every stored sine against `Im exp(i pi x)` in the tower.
pub fn certify_sine_table(prec: u32) -> Vec<IdentityCheck> {
    SINES
        .iter()
        .map(|(x, m)| {
            let name = format!("sin(pi {x}) = {m}");
            let lhs = monomial_product(m);
            let rhs = exp_i_pi(
                x.numer().to_i64().expect("small"),
                x.denom().to_i64().expect("small"),
            );
            match (lhs, rhs) {
                (Ok(l), Ok(p)) => IdentityCheck::squaring(name, &l, &PowerProduct::of(p.im), prec),
                (l, r) => IdentityCheck {
                    name,
                    exact: false,
                    sign: false,
                    deviation: f64::INFINITY,
                    detail: Some(format!("{:?} / {:?}", l.err(), r.err())),
                },
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn examples() {
        assert!(sin_pi_exact(&q(1, 2)).unwrap().is_unit());
        assert_eq!(sin_pi_exact(&q(1, 4)).unwrap(), Monomial::from_dsl("2^-1/2").unwrap());
        let fifth = Monomial::from_dsl("phi psi* 2^-2 5^-1/2").unwrap();
        assert_eq!(sin_pi_exact(&q(1, 5)).unwrap(), fifth);
        assert_eq!(sin_pi_exact(&q(5, 6)).unwrap(), sin_pi_exact(&q(1, 6)).unwrap());
        assert!(matches!(sin_pi_exact(&q(1, 7)), Err(Error::UnsupportedDenominator(_))));
        assert!(sin_pi_exact(&q(3, 2)).is_err());
    }

    #[test]
    fn table_covers_all_supported_points() {
        for n in [24i64, 60] {
            for k in 1..n {
                assert!(sin_pi_exact(&q(k, n)).is_ok(), "{k}/{n}");
            }
        }
    }

    #[test]
    fn table_is_certified() {
        for c in certify_sine_table(200) {
            assert!(c.passes(), "{} {:?}", c.name, c.detail);
        }
    }
}
