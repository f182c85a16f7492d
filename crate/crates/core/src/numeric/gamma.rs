//! Independent numeric gamma function: shift the argument upward with
//! `Gamma(x+1) = x Gamma(x)`, then apply the Stirling series for `ln Gamma`
//! with the remainder bounded by the first omitted term.

use std::sync::{Mutex, OnceLock};

use rug::Integer;

use super::ball::BigBall;
use super::precision::PrecisionConfig;
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Even-index Bernoulli numbers `B_0, B_2, B_4, ...`.
fn bernoulli_even(k: usize) -> Rational {
    bernoulli(2 * k)
}

/// Bernoulli number `B_n` with `B_1 = -1/2`, extended on demand.
pub(crate) fn bernoulli(n: usize) -> Rational {
    static CACHE: OnceLock<Mutex<Vec<Rational>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![Rational::one()]));
    let mut all = cache.lock().expect("bernoulli cache poisoned");
    // `all` holds B_0..B_n for every n (odd ones included, B_1 = -1/2).
    while all.len() <= n {
        let m = all.len();
        let mut binom = Integer::from(1);
        let mut acc = Rational::zero();
        for (j, b) in all.iter().enumerate() {
            acc += &(Rational::from(binom.clone()) * b);
            binom *= m + 1 - j;
            binom /= j + 1;
        }
        let next = -(acc / Rational::from_int(m as i64 + 1));
        all.push(next);
    }
    all[n].clone()
}

/// `Gamma(x)` as a ball at `cfg` precision.
pub fn gamma_numeric(x: &Rational, cfg: &PrecisionConfig) -> Result<BigBall> {
    let g = gamma_bits(x, cfg.bits())?;
    Ok(g)
}

/// `Gamma(x)` as a ball with a midpoint of `bits` bits.
pub fn gamma_bits(x: &Rational, bits: u32) -> Result<BigBall> {
    if x.is_integer() && !x.is_positive() {
        return Err(Error::Pole(x.to_string()));
    }
    let work = bits + 32;
    if let Some(n) = x.to_i64() {
        if n <= 200 {
            let mut f = Integer::from(1);
            for k in 2..n {
                f *= k;
            }
            return Ok(BigBall::from_integer(bits, &f));
        }
    }
    // Shift so that z >= 0.2 * work + 10; there the series reaches 2^-work
    // well before its terms start to grow.
    let threshold = Rational::from_int(i64::from(work) / 5 + 10);
    let mut z = x.clone();
    let mut prod = Rational::one();
    while z < threshold {
        prod *= &z;
        z += &Rational::one();
    }
    let lg = ln_gamma_stirling(&z, work)?;
    let g = lg.exp().div(&BigBall::from_rational(work, &prod))?;
    Ok(g.round_to(bits))
}

/// Stirling series for `ln Gamma(z)`, valid for real `z` large compared to the precision.
fn ln_gamma_stirling(z: &Rational, work: u32) -> Result<BigBall> {
    let zb = BigBall::from_rational(work, z);
    let half = Rational::new(1, 2);
    let two_pi = BigBall::pi(work).mul(&BigBall::from_int(work, 2));
    let mut sum = zb
        .ln()?
        .mul_rational(&(z - &half))
        .sub(&zb)
        .add(&two_pi.ln()?.mul_rational(&half));

    let eps = {
        let mut e = rug::Float::with_val(64, 1);
        e >>= work + 4;
        e
    };
    let inv_z = zb.recip()?;
    let inv_z2 = inv_z.sqr();
    let mut zpow = inv_z; // z^-(2k-1)
    for k in 1usize.. {
        let b = bernoulli_even(k);
        let c = b / Rational::from_int((2 * k * (2 * k - 1)) as i64);
        let term = zpow.mul_rational(&c);
        let bound = term.abs().upper();
        if bound < eps {
            // remainder after k-1 terms is bounded by this term
            return Ok(sum.inflate(&bound));
        }
        if k > 4 * work as usize {
            return Err(Error::Convergence("Stirling series did not reach the target precision".into()));
        }
        sum = sum.add(&term);
        zpow = zpow.mul(&inv_z2);
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use rug::Float;

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_even(1), q(1, 6));
        assert_eq!(bernoulli_even(2), q(-1, 30));
        assert_eq!(bernoulli_even(6), q(691, -2730));
    }

    #[test]
    fn half_is_sqrt_pi() {
        let cfg = PrecisionConfig::new(50);
        let g = gamma_numeric(&q(1, 2), &cfg).unwrap();
        let sqrt_pi = BigBall::pi(cfg.bits() + 20).sqrt().unwrap();
        assert!(g.overlaps(&sqrt_pi));
        assert!(g.max_rel_deviation(&sqrt_pi) < 1e-55);
    }

    #[test]
    fn integers_and_poles() {
        let cfg = PrecisionConfig::new(30);
        assert!(gamma_numeric(&q(1, 1), &cfg).unwrap().contains(&Float::with_val(100, 1)));
        assert!(gamma_numeric(&q(6, 1), &cfg).unwrap().contains(&Float::with_val(100, 120)));
        assert_eq!(gamma_numeric(&q(0, 1), &cfg).unwrap_err(), Error::Pole("0".into()));
        assert!(matches!(gamma_numeric(&q(-3, 1), &cfg), Err(Error::Pole(_))));
    }

    #[test]
    fn one_third() {
        let g = gamma_numeric(&q(1, 3), &PrecisionConfig::new(50)).unwrap();
        assert!(g.mid_string(20).starts_with("2.678938534707747633"));
    }

    #[test]
    fn negative_arguments() {
        // Gamma(-1/2) = -2 sqrt(pi)
        let cfg = PrecisionConfig::new(40);
        let g = gamma_numeric(&q(-1, 2), &cfg).unwrap();
        let want = BigBall::pi(200).sqrt().unwrap().mul(&BigBall::from_int(200, -2));
        assert!(g.max_rel_deviation(&want) < 1e-45);
    }
}
