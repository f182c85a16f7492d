//! Products of rational powers of tower elements, and identities between them
//! checked by the squaring trick: raise both sides to the lcm `L` of all
//! exponent denominators, compare exactly in the tower, and compare signs
//! numerically.

use std::cmp::Ordering;
use std::fmt;

use rug::Integer;

use super::tower::{consts::*, TowerElement};
use crate::atoms::Generator;
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::numeric::BigBall;
use crate::rational::Rational;

/// `prod base_i^exp_i`. Negative bases are allowed only with integer exponents.
#[derive(Clone, Debug, Default)]
pub struct PowerProduct {
    pub factors: Vec<(TowerElement, Rational)>,
}

impl PowerProduct {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn of(base: TowerElement) -> Self {
        Self::new().times(base, Rational::one())
    }

    pub fn times(mut self, base: TowerElement, e: Rational) -> Self {
        self.factors.push((base, e));
        self
    }

    /// Multiplies by `base^(num/den)`.
    pub fn pow(self, base: TowerElement, num: i64, den: i64) -> Self {
        self.times(base, Rational::new(num, den))
    }

    pub fn mul(mut self, other: &PowerProduct) -> Self {
        self.factors.extend(other.factors.iter().cloned());
        self
    }

    /// lcm of all exponent denominators.
    pub fn exponent_lcm(&self) -> Integer {
        self.factors.iter().fold(Integer::from(1), |acc, (_, e)| acc.lcm(e.denom()))
    }

    /// The exact value of `self^l` (`l` a multiple of every exponent denominator).
    pub fn power_in_tower(&self, l: &Integer) -> Result<TowerElement> {
        let mut acc = TowerElement::one();
        for (base, e) in &self.factors {
            let k = (e * &Rational::from(l.clone()))
                .to_i64()
                .ok_or_else(|| Error::Domain(format!("exponent {e} times {l} is not a small integer")))?;
            acc = &acc * &base.pow(k)?;
        }
        Ok(acc)
    }

    pub fn to_ball(&self, prec: u32) -> Result<BigBall> {
        let w = prec + 16;
        let mut acc = BigBall::from_int(w, 1);
        for (base, e) in &self.factors {
            let b = base.to_ball(w);
            let v = match e.to_i64() {
                Some(k) if e.is_integer() => b.pow_int(k)?,
                _ => {
                    if base.sign() != Ordering::Greater {
                        return Err(Error::NegativeValue(base.to_string()));
                    }
                    b.pow_rational(e)?
                }
            };
            acc = acc.mul(&v);
        }
        Ok(acc.round_to(prec))
    }

    /// Exact sign, from the signs of the bases with integer exponents.
    pub fn sign(&self) -> Ordering {
        let mut s = Ordering::Greater;
        for (base, e) in &self.factors {
            match base.sign() {
                Ordering::Equal => {
                    return if e.is_positive() { Ordering::Equal } else { Ordering::Greater };
                }
                Ordering::Less => {
                    if e.is_integer() && e.numer().is_odd() {
                        s = s.reverse();
                    }
                }
                Ordering::Greater => {}
            }
        }
        s
    }

    /// The value as a tower element, when `L` is a power of two (or one):
    /// the `L`-th root is taken by repeated exact square roots.
    pub fn to_tower(&self) -> Result<TowerElement> {
        let l = self.exponent_lcm();
        if !l.is_power_of_two() {
            return Err(Error::NotMonomializable(format!("root of order {l}")));
        }
        let mut v = self.power_in_tower(&l)?;
        let mut k = l.clone();
        while k > 1 {
            v = v.sqrt().ok_or_else(|| Error::NotMonomializable(v.to_string()))?;
            k >>= 1;
        }
        Ok(match self.sign() {
            Ordering::Less => -v,
            _ => v,
        })
    }
}

impl fmt::Display for PowerProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(b, e)| if e.is_one() { format!("({b})") } else { format!("({b})^({e})") })
            .collect();
        write!(f, "{}", parts.join(" * "))
    }
}

/// Exact tower value of a generator.
pub fn generator_in_tower(g: Generator) -> TowerElement {
    use Generator::*;
    match g {
        Two => int(2),
        Three => int(3),
        Five => int(5),
        Sqrt2P1 => sqrt2() + int(1),
        Sqrt3P1 => sqrt3() + int(1),
        Sqrt3PSqrt2 => sqrt3() + sqrt2(),
        Sqrt5PSqrt3 => sqrt5() + sqrt3(),
        Phi => phi(),
        Sqrt15PPsi => sqrt15() + psi(),
        Sqrt15PPsiStar => sqrt15() + psi_star(),
        Sqrt10PSqrtPhi => sqrt10() + sqrt_phi(),
        Sqrt10PSqrtPhiStar => sqrt10() + sqrt_phi_star(),
        Sqrt6PSqrt5 => sqrt6() + sqrt5(),
        Sqrt10P3 => sqrt10() + int(3),
        SqrtPhiPSqrt5 => sqrt_phi() + sqrt5(),
        Sqrt5PSqrtPhiStar => sqrt5() + sqrt_phi_star(),
        SqrtPhiPSqrt3 => sqrt_phi() + sqrt3(),
        Sqrt3PSqrtPhiStar => sqrt3() + sqrt_phi_star(),
    }
}

/// A gamma-free, pi-free, tail-free monomial as a product of tower powers.
pub fn monomial_product(m: &Monomial) -> Result<PowerProduct> {
    if !m.gammas().is_empty() || !m.pi_exponent().is_zero() || m.tail().is_some() {
        return Err(Error::NotMonomializable(m.to_string()));
    }
    let mut p = PowerProduct::of(TowerElement::from_rational(m.coefficient()));
    for (g, e) in m.generators() {
        p = p.times(generator_in_tower(*g), e.clone());
    }
    Ok(p)
}

/// Outcome of checking `lhs = rhs`.
#[derive(Clone, Debug)]
pub struct IdentityCheck {
    pub name: String,
    /// `lhs^L = rhs^L` holds exactly.
    pub exact: bool,
    /// Both sides have the same (nonzero) sign.
    pub sign: bool,
    /// `|lhs - rhs|` at the numeric check precision.
    pub deviation: f64,
    /// Both sides rendered, filled in on failure.
    pub detail: Option<String>,
}

impl IdentityCheck {
    pub fn passes(&self) -> bool {
        self.exact && self.sign
    }

    /// Squaring-trick check of `lhs = rhs`, with a numeric comparison at `prec` bits.
    pub fn squaring(name: impl Into<String>, lhs: &PowerProduct, rhs: &PowerProduct, prec: u32) -> IdentityCheck {
        let l = lhs.exponent_lcm().lcm(&rhs.exponent_lcm());
        let exact = match (lhs.power_in_tower(&l), rhs.power_in_tower(&l)) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        let (ls, rs) = (lhs.sign(), rhs.sign());
        let sign = ls == rs && ls != Ordering::Equal;
        let deviation = match (lhs.to_ball(prec), rhs.to_ball(prec)) {
            (Ok(a), Ok(b)) => a.max_abs_deviation(&b),
            _ => f64::INFINITY,
        };
        let detail = (!(exact && sign)).then(|| {
            let show = |p: &PowerProduct| p.to_ball(prec).map(|b| b.mid_string(30)).unwrap_or_else(|e| e.to_string());
            format!("lhs {lhs} = {} ; rhs {rhs} = {}", show(lhs), show(rhs))
        });
        IdentityCheck { name: name.into(), exact, sign, deviation, detail }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::eval::generator_value;

    #[test]
    fn generators_match_their_numeric_values() {
        for g in Generator::ALL {
            let exact = generator_in_tower(g).to_ball(300);
            let direct = generator_value(g, 300);
            assert!(exact.max_abs_deviation(&direct) < 1e-80, "{g:?}");
        }
    }

    #[test]
    fn squaring_trick() {
        // sqrt(sqrt2 + 1) sqrt(sqrt2 - 1) = 1
        let lhs = PowerProduct::new().pow(sqrt2() + int(1), 1, 2).pow(sqrt2() - int(1), 1, 2);
        let c = IdentityCheck::squaring("conjugates", &lhs, &PowerProduct::of(int(1)), 200);
        assert!(c.passes() && c.deviation < 1e-50);
        // -sqrt2 and sqrt2 agree after squaring; only the sign check separates them
        let neg = PowerProduct::of(int(-1)).pow(int(2), 1, 2);
        let bad = IdentityCheck::squaring("sign", &neg, &PowerProduct::new().pow(int(2), 1, 2), 200);
        assert!(bad.exact && !bad.sign && bad.detail.is_some());
    }

    #[test]
    fn quartic_root_to_tower() {
        // cos(pi/8) = sqrt(sqrt2 + 1) / 2^(3/4)
        let p = PowerProduct::new().pow(sqrt2() + int(1), 1, 2).pow(int(2), -3, 4);
        assert_eq!(p.to_tower().unwrap(), rat(1, 2) * sqrt_2_plus_sqrt2());
    }
}
