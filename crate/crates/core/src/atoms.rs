//! The named algebraic constants, the canonical generator set they rewrite
//! into, and the distinguished gamma symbols.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rational::{q, Rational};

/// Multiplicatively independent positive reals spanning every constant used
/// by the formula tables. The last six only occur through the denominator-120
/// extension atoms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Two,
    Three,
    Five,
    Sqrt2P1,
    Sqrt3P1,
    Sqrt3PSqrt2,
    Sqrt5PSqrt3,
    Phi,
    Sqrt15PPsi,
    Sqrt15PPsiStar,
    Sqrt10PSqrtPhi,
    Sqrt10PSqrtPhiStar,
    Sqrt6PSqrt5,
    Sqrt10P3,
    SqrtPhiPSqrt5,
    Sqrt5PSqrtPhiStar,
    SqrtPhiPSqrt3,
    Sqrt3PSqrtPhiStar,
}

impl Generator {
    pub const ALL: [Generator; 18] = [
        Generator::Two,
        Generator::Three,
        Generator::Five,
        Generator::Sqrt2P1,
        Generator::Sqrt3P1,
        Generator::Sqrt3PSqrt2,
        Generator::Sqrt5PSqrt3,
        Generator::Phi,
        Generator::Sqrt15PPsi,
        Generator::Sqrt15PPsiStar,
        Generator::Sqrt10PSqrtPhi,
        Generator::Sqrt10PSqrtPhiStar,
        Generator::Sqrt6PSqrt5,
        Generator::Sqrt10P3,
        Generator::SqrtPhiPSqrt5,
        Generator::Sqrt5PSqrtPhiStar,
        Generator::SqrtPhiPSqrt3,
        Generator::Sqrt3PSqrtPhiStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Generator::Two => "2",
            Generator::Three => "3",
            Generator::Five => "5",
            Generator::Sqrt2P1 => "sqrt2+1",
            Generator::Sqrt3P1 => "sqrt3+1",
            Generator::Sqrt3PSqrt2 => "sqrt3+sqrt2",
            Generator::Sqrt5PSqrt3 => "sqrt5+sqrt3",
            Generator::Phi => "phi",
            Generator::Sqrt15PPsi => "sqrt15+psi",
            Generator::Sqrt15PPsiStar => "sqrt15+psi*",
            Generator::Sqrt10PSqrtPhi => "sqrt10+sqrt(phi)",
            Generator::Sqrt10PSqrtPhiStar => "sqrt10+sqrt(phi*)",
            Generator::Sqrt6PSqrt5 => "sqrt6+sqrt5",
            Generator::Sqrt10P3 => "sqrt10+3",
            Generator::SqrtPhiPSqrt5 => "sqrt(phi)+sqrt5",
            Generator::Sqrt5PSqrtPhiStar => "sqrt5+sqrt(phi*)",
            Generator::SqrtPhiPSqrt3 => "sqrt(phi)+sqrt3",
            Generator::Sqrt3PSqrtPhiStar => "sqrt3+sqrt(phi*)",
        }
    }

    /// LaTeX body without enclosing parentheses.
    pub fn latex(self) -> &'static str {
        match self {
            Generator::Two => "2",
            Generator::Three => "3",
            Generator::Five => "5",
            Generator::Sqrt2P1 => r"\sqrt{2}+1",
            Generator::Sqrt3P1 => r"\sqrt{3}+1",
            Generator::Sqrt3PSqrt2 => r"\sqrt{3}+\sqrt{2}",
            Generator::Sqrt5PSqrt3 => r"\sqrt{5}+\sqrt{3}",
            Generator::Phi => r"\phi",
            Generator::Sqrt15PPsi => r"\sqrt{15}+\psi",
            Generator::Sqrt15PPsiStar => r"\sqrt{15}+\psi^\star",
            Generator::Sqrt10PSqrtPhi => r"\sqrt{10}+\sqrt{\phi}",
            Generator::Sqrt10PSqrtPhiStar => r"\sqrt{10}+\sqrt{\phi^\star}",
            Generator::Sqrt6PSqrt5 => r"\sqrt{6}+\sqrt{5}",
            Generator::Sqrt10P3 => r"\sqrt{10}+3",
            Generator::SqrtPhiPSqrt5 => r"\sqrt{\phi}+\sqrt{5}",
            Generator::Sqrt5PSqrtPhiStar => r"\sqrt{5}+\sqrt{\phi^\star}",
            Generator::SqrtPhiPSqrt3 => r"\sqrt{\phi}+\sqrt{3}",
            Generator::Sqrt3PSqrtPhiStar => r"\sqrt{3}+\sqrt{\phi^\star}",
        }
    }

    /// Whether the LaTeX body is a sum and needs parentheses under a power.
    pub fn is_compound(self) -> bool {
        !matches!(
            self,
            Generator::Two | Generator::Three | Generator::Five | Generator::Phi
        )
    }

    pub fn prime(self) -> Option<u32> {
        match self {
            Generator::Two => Some(2),
            Generator::Three => Some(3),
            Generator::Five => Some(5),
            _ => None,
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Generator::ALL
            .into_iter()
            .find(|g| g.name() == name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The constants the formula tables are written in, with `phi = 5+sqrt5`,
/// `phi* = 5-sqrt5`, `psi = sqrt(5+2 sqrt5)`, `psi* = sqrt(5-2 sqrt5)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstantAtom {
    Two,
    Three,
    Five,
    Sqrt2P1,
    Sqrt2M1,
    Sqrt3P1,
    Sqrt3M1,
    Sqrt3PSqrt2,
    Sqrt3MSqrt2,
    Sqrt5PSqrt3,
    Sqrt5MSqrt3,
    Phi,
    PhiStar,
    Psi,
    PsiStar,
    Sqrt15PPsi,
    Sqrt15MPsi,
    Sqrt15PPsiStar,
    Sqrt15MPsiStar,
    Sqrt10PSqrtPhi,
    Sqrt10MSqrtPhi,
    Sqrt10PSqrtPhiStar,
    Sqrt10MSqrtPhiStar,
    Sqrt6PSqrt5,
    Sqrt6MSqrt5,
    Sqrt10P3,
    Sqrt10M3,
    SqrtPhiPSqrt5,
    SqrtPhiMSqrt5,
    Sqrt5PSqrtPhiStar,
    Sqrt5MSqrtPhiStar,
    SqrtPhiPSqrt3,
    SqrtPhiMSqrt3,
    Sqrt3PSqrtPhiStar,
    Sqrt3MSqrtPhiStar,
}

impl ConstantAtom {
    pub const ALL: [ConstantAtom; 35] = [
        ConstantAtom::Two,
        ConstantAtom::Three,
        ConstantAtom::Five,
        ConstantAtom::Sqrt2P1,
        ConstantAtom::Sqrt2M1,
        ConstantAtom::Sqrt3P1,
        ConstantAtom::Sqrt3M1,
        ConstantAtom::Sqrt3PSqrt2,
        ConstantAtom::Sqrt3MSqrt2,
        ConstantAtom::Sqrt5PSqrt3,
        ConstantAtom::Sqrt5MSqrt3,
        ConstantAtom::Phi,
        ConstantAtom::PhiStar,
        ConstantAtom::Psi,
        ConstantAtom::PsiStar,
        ConstantAtom::Sqrt15PPsi,
        ConstantAtom::Sqrt15MPsi,
        ConstantAtom::Sqrt15PPsiStar,
        ConstantAtom::Sqrt15MPsiStar,
        ConstantAtom::Sqrt10PSqrtPhi,
        ConstantAtom::Sqrt10MSqrtPhi,
        ConstantAtom::Sqrt10PSqrtPhiStar,
        ConstantAtom::Sqrt10MSqrtPhiStar,
        ConstantAtom::Sqrt6PSqrt5,
        ConstantAtom::Sqrt6MSqrt5,
        ConstantAtom::Sqrt10P3,
        ConstantAtom::Sqrt10M3,
        ConstantAtom::SqrtPhiPSqrt5,
        ConstantAtom::SqrtPhiMSqrt5,
        ConstantAtom::Sqrt5PSqrtPhiStar,
        ConstantAtom::Sqrt5MSqrtPhiStar,
        ConstantAtom::SqrtPhiPSqrt3,
        ConstantAtom::SqrtPhiMSqrt3,
        ConstantAtom::Sqrt3PSqrtPhiStar,
        ConstantAtom::Sqrt3MSqrtPhiStar,
    ];

    pub fn name(self) -> &'static str {
        use ConstantAtom::*;
        match self {
            Two => "2",
            Three => "3",
            Five => "5",
            Sqrt2P1 => "sqrt2+1",
            Sqrt2M1 => "sqrt2-1",
            Sqrt3P1 => "sqrt3+1",
            Sqrt3M1 => "sqrt3-1",
            Sqrt3PSqrt2 => "sqrt3+sqrt2",
            Sqrt3MSqrt2 => "sqrt3-sqrt2",
            Sqrt5PSqrt3 => "sqrt5+sqrt3",
            Sqrt5MSqrt3 => "sqrt5-sqrt3",
            Phi => "phi",
            PhiStar => "phi*",
            Psi => "psi",
            PsiStar => "psi*",
            Sqrt15PPsi => "sqrt15+psi",
            Sqrt15MPsi => "sqrt15-psi",
            Sqrt15PPsiStar => "sqrt15+psi*",
            Sqrt15MPsiStar => "sqrt15-psi*",
            Sqrt10PSqrtPhi => "sqrt10+sqrt(phi)",
            Sqrt10MSqrtPhi => "sqrt10-sqrt(phi)",
            Sqrt10PSqrtPhiStar => "sqrt10+sqrt(phi*)",
            Sqrt10MSqrtPhiStar => "sqrt10-sqrt(phi*)",
            Sqrt6PSqrt5 => "sqrt6+sqrt5",
            Sqrt6MSqrt5 => "sqrt6-sqrt5",
            Sqrt10P3 => "sqrt10+3",
            Sqrt10M3 => "sqrt10-3",
            SqrtPhiPSqrt5 => "sqrt(phi)+sqrt5",
            SqrtPhiMSqrt5 => "sqrt(phi)-sqrt5",
            Sqrt5PSqrtPhiStar => "sqrt5+sqrt(phi*)",
            Sqrt5MSqrtPhiStar => "sqrt5-sqrt(phi*)",
            SqrtPhiPSqrt3 => "sqrt(phi)+sqrt3",
            SqrtPhiMSqrt3 => "sqrt(phi)-sqrt3",
            Sqrt3PSqrtPhiStar => "sqrt3+sqrt(phi*)",
            Sqrt3MSqrtPhiStar => "sqrt3-sqrt(phi*)",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        ConstantAtom::ALL
            .into_iter()
            .find(|a| a.name() == name)
            .ok_or_else(|| Error::UnknownAtom(name.to_string()))
    }

    /// The atom as a product of generator powers. Minus-partners are removed
    /// through their conjugate products, e.g. `(sqrt15-psi)(sqrt15+psi) = 2 phi*`.
    pub fn rewrite(self) -> Vec<(Generator, Rational)> {
        use ConstantAtom as A;
        use Generator as G;
        let one = || q(1, 1);
        match self {
            A::Two => vec![(G::Two, one())],
            A::Three => vec![(G::Three, one())],
            A::Five => vec![(G::Five, one())],
            A::Sqrt2P1 => vec![(G::Sqrt2P1, one())],
            A::Sqrt2M1 => vec![(G::Sqrt2P1, q(-1, 1))],
            A::Sqrt3P1 => vec![(G::Sqrt3P1, one())],
            A::Sqrt3M1 => vec![(G::Two, one()), (G::Sqrt3P1, q(-1, 1))],
            A::Sqrt3PSqrt2 => vec![(G::Sqrt3PSqrt2, one())],
            A::Sqrt3MSqrt2 => vec![(G::Sqrt3PSqrt2, q(-1, 1))],
            A::Sqrt5PSqrt3 => vec![(G::Sqrt5PSqrt3, one())],
            A::Sqrt5MSqrt3 => vec![(G::Two, one()), (G::Sqrt5PSqrt3, q(-1, 1))],
            A::Phi => vec![(G::Phi, one())],
            // phi* = 20/phi
            A::PhiStar => vec![(G::Two, q(2, 1)), (G::Five, one()), (G::Phi, q(-1, 1))],
            // psi = phi^(3/2) / (2^(3/2) sqrt5)
            A::Psi => vec![(G::Two, q(-3, 2)), (G::Five, q(-1, 2)), (G::Phi, q(3, 2))],
            A::PsiStar => vec![(G::Two, q(3, 2)), (G::Five, one()), (G::Phi, q(-3, 2))],
            A::Sqrt15PPsi => vec![(G::Sqrt15PPsi, one())],
            // (sqrt15-psi)(sqrt15+psi) = 10 - 2 sqrt5 = 2 phi*
            A::Sqrt15MPsi => vec![
                (G::Two, q(3, 1)),
                (G::Five, one()),
                (G::Phi, q(-1, 1)),
                (G::Sqrt15PPsi, q(-1, 1)),
            ],
            A::Sqrt15PPsiStar => vec![(G::Sqrt15PPsiStar, one())],
            A::Sqrt15MPsiStar => vec![
                (G::Two, one()),
                (G::Phi, one()),
                (G::Sqrt15PPsiStar, q(-1, 1)),
            ],
            A::Sqrt10PSqrtPhi => vec![(G::Sqrt10PSqrtPhi, one())],
            // 10 - phi = phi*
            A::Sqrt10MSqrtPhi => vec![
                (G::Two, q(2, 1)),
                (G::Five, one()),
                (G::Phi, q(-1, 1)),
                (G::Sqrt10PSqrtPhi, q(-1, 1)),
            ],
            A::Sqrt10PSqrtPhiStar => vec![(G::Sqrt10PSqrtPhiStar, one())],
            A::Sqrt10MSqrtPhiStar => vec![(G::Phi, one()), (G::Sqrt10PSqrtPhiStar, q(-1, 1))],
            A::Sqrt6PSqrt5 => vec![(G::Sqrt6PSqrt5, one())],
            A::Sqrt6MSqrt5 => vec![(G::Sqrt6PSqrt5, q(-1, 1))],
            A::Sqrt10P3 => vec![(G::Sqrt10P3, one())],
            A::Sqrt10M3 => vec![(G::Sqrt10P3, q(-1, 1))],
            A::SqrtPhiPSqrt5 => vec![(G::SqrtPhiPSqrt5, one())],
            // phi - 5 = sqrt5
            A::SqrtPhiMSqrt5 => vec![(G::Five, q(1, 2)), (G::SqrtPhiPSqrt5, q(-1, 1))],
            A::Sqrt5PSqrtPhiStar => vec![(G::Sqrt5PSqrtPhiStar, one())],
            // 5 - phi* = sqrt5
            A::Sqrt5MSqrtPhiStar => vec![(G::Five, q(1, 2)), (G::Sqrt5PSqrtPhiStar, q(-1, 1))],
            A::SqrtPhiPSqrt3 => vec![(G::SqrtPhiPSqrt3, one())],
            // phi - 3 = sqrt5 + 2 = phi^3 / (2^3 5^(3/2))
            A::SqrtPhiMSqrt3 => vec![
                (G::Two, q(-3, 1)),
                (G::Five, q(-3, 2)),
                (G::Phi, q(3, 1)),
                (G::SqrtPhiPSqrt3, q(-1, 1)),
            ],
            A::Sqrt3PSqrtPhiStar => vec![(G::Sqrt3PSqrtPhiStar, one())],
            // 3 - phi* = sqrt5 - 2 = 2^3 5^(3/2) / phi^3
            A::Sqrt3MSqrtPhiStar => vec![
                (G::Two, q(3, 1)),
                (G::Five, q(3, 2)),
                (G::Phi, q(-3, 1)),
                (G::Sqrt3PSqrtPhiStar, q(-1, 1)),
            ],
        }
    }
}

impl fmt::Display for ConstantAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstantAtom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        ConstantAtom::from_name(s)
    }
}

/// Arguments of the ten basis gamma values for denominators dividing 24 or 60.
pub const BASIS_POINTS: [(i64, i64); 10] = [
    (1, 3),
    (1, 4),
    (1, 5),
    (2, 5),
    (1, 8),
    (1, 15),
    (1, 20),
    (1, 24),
    (1, 60),
    (7, 60),
];

/// The six additional generators for denominators dividing 120.
pub const EXTENSION_POINTS: [(i64, i64); 6] = [(1, 40), (3, 40), (7, 40), (1, 120), (7, 120), (11, 120)];

/// A distinguished gamma value `Gamma(k/n)` kept symbolic.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaSymbol(Rational);

impl GammaSymbol {
    pub fn new(argument: Rational) -> Result<Self> {
        let ok = BASIS_POINTS
            .iter()
            .chain(EXTENSION_POINTS.iter())
            .any(|&(k, n)| argument == q(k, n));
        if ok {
            Ok(GammaSymbol(argument))
        } else {
            Err(Error::InvalidGammaSymbol(argument.to_string()))
        }
    }

    pub fn argument(&self) -> &Rational {
        &self.0
    }

    pub fn is_extension(&self) -> bool {
        EXTENSION_POINTS.iter().any(|&(k, n)| self.0 == q(k, n))
    }

    pub fn basis() -> Vec<GammaSymbol> {
        BASIS_POINTS.iter().map(|&(k, n)| GammaSymbol(q(k, n))).collect()
    }

    pub fn extension() -> Vec<GammaSymbol> {
        EXTENSION_POINTS.iter().map(|&(k, n)| GammaSymbol(q(k, n))).collect()
    }

    pub fn all() -> Vec<GammaSymbol> {
        let mut v = Self::basis();
        v.extend(Self::extension());
        v
    }
}

impl fmt::Display for GammaSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for g in Generator::ALL {
            assert_eq!(Generator::from_name(g.name()).unwrap(), g);
        }
        for a in ConstantAtom::ALL {
            assert_eq!(ConstantAtom::from_name(a.name()).unwrap(), a);
        }
        assert!(ConstantAtom::from_name("sqrt7").is_err());
    }

    #[test]
    fn gamma_symbols_are_restricted() {
        assert!(GammaSymbol::new(q(1, 3)).is_ok());
        assert!(GammaSymbol::new(q(11, 120)).unwrap().is_extension());
        assert!(GammaSymbol::new(q(2, 3)).is_err());
        assert!(GammaSymbol::new(q(1, 7)).is_err());
        assert_eq!(GammaSymbol::all().len(), 16);
    }
}
