//! Numeric values of the named constants (straight from their nested-radical
//! definitions) and of whole monomials.

use super::ball::BigBall;
use super::gamma::gamma_bits;
use super::precision::PrecisionConfig;
use crate::atoms::{ConstantAtom, Generator};
use crate::error::Result;
use crate::monomial::Monomial;

struct Radicals {
    s2: BigBall,
    s3: BigBall,
    s5: BigBall,
    s6: BigBall,
    s10: BigBall,
    s15: BigBall,
    phi: BigBall,
    phi_star: BigBall,
    sqrt_phi: BigBall,
    sqrt_phi_star: BigBall,
    psi: BigBall,
    psi_star: BigBall,
}

impl Radicals {
    fn new(prec: u32) -> Radicals {
        let int = |n| BigBall::from_int(prec, n);
        let root = |n| int(n).sqrt().expect("positive");
        let s5 = root(5);
        let phi = int(5).add(&s5);
        let phi_star = int(5).sub(&s5);
        let two_s5 = s5.mul(&int(2));
        Radicals {
            s2: root(2),
            s3: root(3),
            s6: root(6),
            s10: root(10),
            s15: root(15),
            sqrt_phi: phi.sqrt().expect("positive"),
            sqrt_phi_star: phi_star.sqrt().expect("positive"),
            psi: int(5).add(&two_s5).sqrt().expect("positive"),
            psi_star: int(5).sub(&two_s5).sqrt().expect("positive"),
            s5,
            phi,
            phi_star,
        }
    }
}

/// Numeric value of a named constant, evaluated from its own definition.
pub fn atom_value(a: ConstantAtom, prec: u32) -> BigBall {
    use ConstantAtom::*;
    let w = prec + 20;
    let r = Radicals::new(w);
    let int = |n| BigBall::from_int(w, n);
    let one = int(1);
    let v = match a {
        Two => int(2),
        Three => int(3),
        Five => int(5),
        Sqrt2P1 => r.s2.add(&one),
        Sqrt2M1 => r.s2.sub(&one),
        Sqrt3P1 => r.s3.add(&one),
        Sqrt3M1 => r.s3.sub(&one),
        Sqrt3PSqrt2 => r.s3.add(&r.s2),
        Sqrt3MSqrt2 => r.s3.sub(&r.s2),
        Sqrt5PSqrt3 => r.s5.add(&r.s3),
        Sqrt5MSqrt3 => r.s5.sub(&r.s3),
        Phi => r.phi.clone(),
        PhiStar => r.phi_star.clone(),
        Psi => r.psi.clone(),
        PsiStar => r.psi_star.clone(),
        Sqrt15PPsi => r.s15.add(&r.psi),
        Sqrt15MPsi => r.s15.sub(&r.psi),
        Sqrt15PPsiStar => r.s15.add(&r.psi_star),
        Sqrt15MPsiStar => r.s15.sub(&r.psi_star),
        Sqrt10PSqrtPhi => r.s10.add(&r.sqrt_phi),
        Sqrt10MSqrtPhi => r.s10.sub(&r.sqrt_phi),
        Sqrt10PSqrtPhiStar => r.s10.add(&r.sqrt_phi_star),
        Sqrt10MSqrtPhiStar => r.s10.sub(&r.sqrt_phi_star),
        Sqrt6PSqrt5 => r.s6.add(&r.s5),
        Sqrt6MSqrt5 => r.s6.sub(&r.s5),
        Sqrt10P3 => r.s10.add(&int(3)),
        Sqrt10M3 => r.s10.sub(&int(3)),
        SqrtPhiPSqrt5 => r.sqrt_phi.add(&r.s5),
        SqrtPhiMSqrt5 => r.sqrt_phi.sub(&r.s5),
        Sqrt5PSqrtPhiStar => r.s5.add(&r.sqrt_phi_star),
        Sqrt5MSqrtPhiStar => r.s5.sub(&r.sqrt_phi_star),
        SqrtPhiPSqrt3 => r.sqrt_phi.add(&r.s3),
        SqrtPhiMSqrt3 => r.sqrt_phi.sub(&r.s3),
        Sqrt3PSqrtPhiStar => r.s3.add(&r.sqrt_phi_star),
        Sqrt3MSqrtPhiStar => r.s3.sub(&r.sqrt_phi_star),
    };
    v.round_to(prec)
}

/// Numeric value of a generator.
pub fn generator_value(g: Generator, prec: u32) -> BigBall {
    let atom = ConstantAtom::from_name(g.name()).expect("every generator is an atom");
    atom_value(atom, prec)
}

/// Evaluates every factor of a monomial, gamma symbols through the
/// independent oracle, and multiplies them.
pub fn eval_monomial(m: &Monomial, cfg: &PrecisionConfig) -> Result<BigBall> {
    eval_monomial_bits(m, cfg.bits())
}

pub fn eval_monomial_bits(m: &Monomial, bits: u32) -> Result<BigBall> {
    let w = bits + 20;
    let mut acc = BigBall::from_rational(w, m.coefficient());
    if !m.pi_exponent().is_zero() {
        acc = acc.mul(&BigBall::pi(w).pow_rational(m.pi_exponent())?);
    }
    for (g, e) in m.generators() {
        acc = acc.mul(&generator_value(*g, w).pow_rational(e)?);
    }
    for (s, e) in m.gammas() {
        acc = acc.mul(&gamma_bits(s.argument(), w)?.pow_rational(e)?);
    }
    if let Some(t) = m.tail() {
        acc = acc.mul(t);
    }
    Ok(acc.round_to(bits))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use rug::Float;

    #[test]
    fn unit_and_sqrt_pi() {
        let cfg = PrecisionConfig::new(50);
        let one = eval_monomial(&Monomial::unit(), &cfg).unwrap();
        assert!(one.contains(&Float::with_val(10, 1)));
        assert!(one.rad_f64() < 1e-60);
        let r = eval_monomial(&Monomial::pi_pow(q(1, 2)), &cfg).unwrap();
        assert!(r.mid_string(11).starts_with("1.7724538509"));
    }

    #[test]
    fn rewrites_are_sound() {
        let cfg = PrecisionConfig::new(100);
        for a in ConstantAtom::ALL {
            let direct = atom_value(a, cfg.bits());
            let rewritten = eval_monomial(&Monomial::atom(a, &q(1, 1)), &cfg).unwrap();
            assert!(direct.is_positive(), "{a} must be positive");
            assert!(direct.max_rel_deviation(&rewritten) < 1e-95, "rewrite of {a}");
        }
    }
}
