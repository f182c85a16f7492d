//! Exact arithmetic in the real field
//! `T = Q(sqrt5)(sqrt2)(sqrt3)(sqrt(phi))(sqrt(2+sqrt2))`, `phi = 5 + sqrt5`.
//!
//! `T` has degree 32 over Q and equals the real subfield of the 240th
//! cyclotomic field, so it holds `cos(pi k/120)` and `sin(pi k/120)` for all `k`.
//! Elements are coordinate vectors in the multilinear basis: bit `j` of the
//! index selects radical `s_(j+1)`. Every radical is the positive real root.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::LazyLock;

use rug::Integer;

use crate::error::{Error, Result};
use crate::numeric::BigBall;
use crate::rational::Rational;

pub const DEPTH: usize = 5;
pub const DIM: usize = 1 << DEPTH;

/// Display names of the adjoined radicals, innermost first.
pub const RADICAL_NAMES: [&str; DEPTH] = ["sqrt5", "sqrt2", "sqrt3", "sqrt(phi)", "sqrt(2+sqrt2)"];

/// Radicands as coordinate vectors; radicand `k` lives in the first `2^k` coordinates.
static RADICANDS: LazyLock<[Vec<Rational>; DEPTH]> = LazyLock::new(|| {
    let mut r: [Vec<Rational>; DEPTH] = std::array::from_fn(|_| vec![Rational::zero(); DIM]);
    r[0][0] = Rational::from_int(5);
    r[1][0] = Rational::from_int(2);
    r[2][0] = Rational::from_int(3);
    r[3][0] = Rational::from_int(5);
    r[3][1] = Rational::from_int(1);
    r[4][0] = Rational::from_int(2);
    r[4][2] = Rational::from_int(1);
    r
});

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TowerElement {
    coords: Vec<Rational>,
}

fn is_zero(x: &[Rational]) -> bool {
    x.iter().all(Rational::is_zero)
}

fn add_slices(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

fn sub_slices(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn scale_slice(x: &[Rational], c: &Rational) -> Vec<Rational> {
    x.iter().map(|a| a * c).collect()
}

/// Product of two elements of the level-`k` field (slices of length `2^k`).
fn mul_slices(x: &[Rational], y: &[Rational], k: usize) -> Vec<Rational> {
    let len = 1 << k;
    if is_zero(x) || is_zero(y) {
        return vec![Rational::zero(); len];
    }
    if k == 0 {
        return vec![&x[0] * &y[0]];
    }
    let h = len / 2;
    let (a1, b1) = x.split_at(h);
    let (a2, b2) = y.split_at(h);
    let r = &RADICANDS[k - 1][..h];
    let aa = mul_slices(a1, a2, k - 1);
    let bb = mul_slices(b1, b2, k - 1);
    let bbr = mul_slices(&bb, r, k - 1);
    let ab = mul_slices(a1, b2, k - 1);
    let ba = mul_slices(b1, a2, k - 1);
    let mut out = add_slices(&aa, &bbr);
    out.extend(add_slices(&ab, &ba));
    out
}

/// Inverse in the level-`k` field via `(a + b s)^-1 = (a - b s) / (a^2 - b^2 r)`.
fn inv_slice(x: &[Rational], k: usize) -> Option<Vec<Rational>> {
    if is_zero(x) {
        return None;
    }
    if k == 0 {
        return Some(vec![x[0].inv().ok()?]);
    }
    let h = x.len() / 2;
    let (a, b) = x.split_at(h);
    if is_zero(b) {
        let mut out = inv_slice(a, k - 1)?;
        out.extend(vec![Rational::zero(); h]);
        return Some(out);
    }
    let r = &RADICANDS[k - 1][..h];
    let norm = sub_slices(&mul_slices(a, a, k - 1), &mul_slices(&mul_slices(b, b, k - 1), r, k - 1));
    let ninv = inv_slice(&norm, k - 1)?;
    let mut out = mul_slices(a, &ninv, k - 1);
    let nb = mul_slices(b, &ninv, k - 1);
    out.extend(nb.iter().map(|v| -v));
    Some(out)
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    if !n.is_perfect_square() || !d.is_perfect_square() {
        return None;
    }
    Rational::from_integers(Integer::from(n.sqrt_ref()), Integer::from(d.sqrt_ref())).ok()
}

/// Some square root of `x` in the level-`k` field, if one exists (sign unspecified).
///
/// For `x = A + B s` a root `c + d s` needs `c^2 + d^2 r = A` and `2cd = B`, so
/// `(c^2 - d^2 r)^2 = A^2 - B^2 r =: N` and `c^2 = (A +- sqrt N) / 2`.
fn sqrt_slice(x: &[Rational], k: usize) -> Option<Vec<Rational>> {
    if k == 0 {
        return rational_sqrt(&x[0]).map(|v| vec![v]);
    }
    let h = x.len() / 2;
    let zeros = || vec![Rational::zero(); h];
    if is_zero(x) {
        return Some(vec![Rational::zero(); 2 * h]);
    }
    let (a, b) = x.split_at(h);
    let r = &RADICANDS[k - 1][..h];
    if is_zero(b) {
        if let Some(mut c) = sqrt_slice(a, k - 1) {
            c.extend(zeros());
            return Some(c);
        }
        let rinv = inv_slice(r, k - 1)?;
        let d = sqrt_slice(&mul_slices(a, &rinv, k - 1), k - 1)?;
        let mut out = zeros();
        out.extend(d);
        return Some(out);
    }
    let n = sub_slices(&mul_slices(a, a, k - 1), &mul_slices(&mul_slices(b, b, k - 1), r, k - 1));
    let root_n = sqrt_slice(&n, k - 1)?;
    let half = Rational::new(1, 2);
    for cand in [add_slices(a, &root_n), sub_slices(a, &root_n)] {
        let c2 = scale_slice(&cand, &half);
        let Some(c) = sqrt_slice(&c2, k - 1) else {
            continue;
        };
        let Some(cinv) = inv_slice(&c, k - 1) else {
            continue;
        };
        let d = scale_slice(&mul_slices(b, &cinv, k - 1), &half);
        let mut y = c;
        y.extend(d);
        if mul_slices(&y, &y, k) == x {
            return Some(y);
        }
    }
    None
}

impl TowerElement {
    pub fn zero() -> Self {
        TowerElement { coords: vec![Rational::zero(); DIM] }
    }

    pub fn one() -> Self {
        Self::from_rational(&Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    pub fn from_rational(q: &Rational) -> Self {
        let mut e = Self::zero();
        e.coords[0] = q.clone();
        e
    }

    /// Builds an element from explicit coordinates (padded with zeros).
    pub fn from_coords(coords: &[Rational]) -> Result<Self> {
        if coords.len() > DIM {
            return Err(Error::TowerMismatch);
        }
        let mut e = Self::zero();
        e.coords[..coords.len()].clone_from_slice(coords);
        Ok(e)
    }

    /// The adjoined radical `s_(j+1)` (`j` counts from zero).
    pub fn radical(j: usize) -> Self {
        let mut e = Self::zero();
        e.coords[1 << j] = Rational::one();
        e
    }

    pub fn radicand(j: usize) -> Self {
        TowerElement { coords: RADICANDS[j].clone() }
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.coords)
    }

    /// The rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        is_zero(&self.coords[1..]).then(|| self.coords[0].clone())
    }

    /// Smallest `k` such that the element lies in the level-`k` subfield.
    pub fn level(&self) -> usize {
        match self.coords.iter().rposition(|c| !c.is_zero()) {
            None | Some(0) => 0,
            Some(i) => (usize::BITS - i.leading_zeros()) as usize,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TowerElement { coords: scale_slice(&self.coords, c) }
    }

    pub fn inv(&self) -> Result<Self> {
        inv_slice(&self.coords, DEPTH).map(|coords| TowerElement { coords }).ok_or(Error::DivisionByZero)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// The nonnegative square root if it lies in the tower.
    pub fn sqrt(&self) -> Option<Self> {
        if self.sign() == Ordering::Less {
            return None;
        }
        let root = TowerElement { coords: sqrt_slice(&self.coords, DEPTH)? };
        Some(if root.sign() == Ordering::Less { -root } else { root })
    }

    /// Ball enclosure of the real value.
    pub fn to_ball(&self, prec: u32) -> BigBall {
        let w = prec + 16;
        let int = |n| BigBall::from_int(w, n);
        let s5 = int(5).sqrt().expect("positive");
        let s2 = int(2).sqrt().expect("positive");
        let radicals = [
            s5.clone(),
            s2.clone(),
            int(3).sqrt().expect("positive"),
            int(5).add(&s5).sqrt().expect("positive"),
            int(2).add(&s2).sqrt().expect("positive"),
        ];
        let mut acc = BigBall::from_int(w, 0);
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = BigBall::from_rational(w, c);
            for (j, s) in radicals.iter().enumerate() {
                if i >> j & 1 == 1 {
                    term = term.mul(s);
                }
            }
            acc = acc.add(&term);
        }
        acc.round_to(prec)
    }

    /// Exact sign: zero is detected exactly, otherwise precision grows until
    /// the enclosure excludes zero.
    pub fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let mut prec = 128;
        loop {
            let b = self.to_ball(prec);
            if b.is_positive() {
                return Ordering::Greater;
            }
            if b.is_negative() {
                return Ordering::Less;
            }
            prec *= 2;
            assert!(prec <= 1 << 20, "sign of a nonzero tower element not resolved");
        }
    }
}

impl Default for TowerElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut t = c.to_string();
            for (j, name) in RADICAL_NAMES.iter().enumerate() {
                if i >> j & 1 == 1 {
                    t.push('*');
                    t.push_str(name);
                }
            }
            terms.push(t);
        }
        if terms.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl Add for &TowerElement {
    type Output = TowerElement;
    fn add(self, rhs: &TowerElement) -> TowerElement {
        TowerElement { coords: add_slices(&self.coords, &rhs.coords) }
    }
}

impl Sub for &TowerElement {
    type Output = TowerElement;
    fn sub(self, rhs: &TowerElement) -> TowerElement {
        TowerElement { coords: sub_slices(&self.coords, &rhs.coords) }
    }
}

impl Mul for &TowerElement {
    type Output = TowerElement;
    fn mul(self, rhs: &TowerElement) -> TowerElement {
        TowerElement { coords: mul_slices(&self.coords, &rhs.coords, DEPTH) }
    }
}

impl Neg for &TowerElement {
    type Output = TowerElement;
    fn neg(self) -> TowerElement {
        TowerElement { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $method:ident) => {
        impl $tr for TowerElement {
            type Output = TowerElement;
            fn $method(self, rhs: TowerElement) -> TowerElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&TowerElement> for TowerElement {
            type Output = TowerElement;
            fn $method(self, rhs: &TowerElement) -> TowerElement {
                (&self).$method(rhs)
            }
        }
    };
}

owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for TowerElement {
    type Output = TowerElement;
    fn neg(self) -> TowerElement {
        -&self
    }
}

/// Checks that every radicand is positive and not a square in the field
/// below it, so each adjunction really doubles the degree.
pub fn verify_adjunctions() -> Result<()> {
    for k in 0..DEPTH {
        let r = &RADICANDS[k][..1 << k];
        let e = TowerElement::radicand(k);
        if e.sign() != Ordering::Greater || sqrt_slice(r, k).is_some() {
            return Err(Error::Domain(format!("radicand of {} is a square below it", RADICAL_NAMES[k])));
        }
    }
    Ok(())
}

/// Named elements used throughout the trigonometric tables.
pub mod consts {
    use super::TowerElement;
    use crate::rational::Rational;

    pub fn int(n: i64) -> TowerElement {
        TowerElement::from_int(n)
    }

    pub fn rat(n: i64, d: i64) -> TowerElement {
        TowerElement::from_rational(&Rational::new(n, d))
    }

    pub fn sqrt5() -> TowerElement {
        TowerElement::radical(0)
    }

    pub fn sqrt2() -> TowerElement {
        TowerElement::radical(1)
    }

    pub fn sqrt3() -> TowerElement {
        TowerElement::radical(2)
    }

    pub fn sqrt6() -> TowerElement {
        sqrt2() * sqrt3()
    }

    pub fn sqrt10() -> TowerElement {
        sqrt2() * sqrt5()
    }

    pub fn sqrt15() -> TowerElement {
        sqrt3() * sqrt5()
    }

    /// `phi = 5 + sqrt5`.
    pub fn phi() -> TowerElement {
        int(5) + sqrt5()
    }

    /// `phi* = 5 - sqrt5`.
    pub fn phi_star() -> TowerElement {
        int(5) - sqrt5()
    }

    pub fn sqrt_phi() -> TowerElement {
        TowerElement::radical(3)
    }

    /// `sqrt(phi*) = 2 sqrt5 / sqrt(phi)`.
    pub fn sqrt_phi_star() -> TowerElement {
        (int(2) * sqrt5()).div(&sqrt_phi()).expect("nonzero")
    }

    /// `psi = sqrt(5 + 2 sqrt5) = phi sqrt(phi) / (2 sqrt10)`.
    pub fn psi() -> TowerElement {
        (phi() * sqrt_phi()).div(&(int(2) * sqrt10())).expect("nonzero")
    }

    /// `psi* = sqrt(5 - 2 sqrt5) = sqrt5 / psi`.
    pub fn psi_star() -> TowerElement {
        sqrt5().div(&psi()).expect("nonzero")
    }

    /// `sqrt(2 + sqrt2) = 2 cos(pi/8)`.
    pub fn sqrt_2_plus_sqrt2() -> TowerElement {
        TowerElement::radical(4)
    }
}

#[cfg(test)]
mod tests {
    use super::consts::*;
    use super::*;

    #[test]
    fn adjunctions_are_proper() {
        verify_adjunctions().unwrap();
    }

    #[test]
    fn radical_squares() {
        for j in 0..DEPTH {
            let s = TowerElement::radical(j);
            assert_eq!(&s * &s, TowerElement::radicand(j));
        }
        assert_eq!(psi() * psi(), int(5) + int(2) * sqrt5());
        assert_eq!(psi_star() * psi_star(), int(5) - int(2) * sqrt5());
        assert_eq!(sqrt_phi_star() * sqrt_phi_star(), phi_star());
        assert!(psi_star().sign() == Ordering::Greater);
    }

    #[test]
    fn inverse_and_sqrt() {
        let x = int(3) + sqrt_phi() - rat(1, 2) * sqrt_2_plus_sqrt2() * sqrt3();
        let y = x.inv().unwrap();
        assert_eq!(&x * &y, TowerElement::one());
        let sq = &x * &x;
        let root = sq.sqrt().unwrap();
        assert_eq!(root, if x.sign() == Ordering::Less { -x } else { x });
        assert!(int(2).sqrt().is_some());
        assert!(int(7).sqrt().is_none());
        assert!(int(-4).sqrt().is_none());
        assert!(TowerElement::zero().inv().is_err());
    }

    #[test]
    fn denests_quartic_root() {
        // sqrt((sqrt2 + 1) / (2 sqrt2)) = cos(pi/8) = sqrt(2+sqrt2)/2
        let v = (sqrt2() + int(1)).div(&(int(2) * sqrt2())).unwrap();
        assert_eq!(v.sqrt().unwrap(), rat(1, 2) * sqrt_2_plus_sqrt2());
    }

    #[test]
    fn numeric_value() {
        let b = psi().to_ball(200);
        let f = b.mid_f64();
        assert!((f - (5.0 + 2.0 * 5f64.sqrt()).sqrt()).abs() < 1e-14);
        assert_eq!(psi().level(), 4);
        assert_eq!(int(3).level(), 0);
        assert_eq!(sqrt2().level(), 2);
    }
}
