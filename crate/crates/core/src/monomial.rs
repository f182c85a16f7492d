//! Canonical products `q * pi^e * prod g^e_g * prod Gamma(b)^f_b`.

use std::collections::BTreeMap;
use std::fmt;

use rug::{Float, Integer};
use serde_json::{Map, Value};

use crate::atoms::{ConstantAtom, GammaSymbol, Generator};
use crate::error::{Error, Result};
use crate::numeric::BigBall;
use crate::rational::Rational;

/// Precision of numeric tails. All tails are kept at exactly this precision so
/// that the JSON form round-trips.
pub const TAIL_BITS: u32 = 400;

/// A raw input factor for [`canonicalize`].
#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Atom(ConstantAtom),
    Pi,
    Gamma(GammaSymbol),
    Rational(Rational),
}

impl Factor {
    /// Resolves `pi`, `G(k/n)` / `Gamma(k/n)`, an atom name, or a positive rational.
    pub fn from_name(name: &str) -> Result<Self> {
        if name == "pi" {
            return Ok(Factor::Pi);
        }
        let inner = name
            .strip_prefix("G(")
            .or_else(|| name.strip_prefix("Gamma("))
            .and_then(|s| s.strip_suffix(')'));
        if let Some(arg) = inner {
            return Ok(Factor::Gamma(GammaSymbol::new(arg.parse()?)?));
        }
        if let Ok(a) = ConstantAtom::from_name(name) {
            return Ok(Factor::Atom(a));
        }
        name.parse::<Rational>()
            .map(Factor::Rational)
            .map_err(|_| Error::UnknownAtom(name.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Monomial {
    coefficient: Rational,
    pi: Rational,
    generators: BTreeMap<Generator, Rational>,
    gammas: BTreeMap<GammaSymbol, Rational>,
    tail: Option<BigBall>,
}

/// Splits a positive rational into exponents of 2, 3, 5 and a part coprime to 30.
fn split_smooth(r: &Rational) -> ([Integer; 3], Rational) {
    let mut num = r.numer().clone();
    let mut den = r.denom().clone();
    let mut exps = [Integer::new(), Integer::new(), Integer::new()];
    for (i, p) in [2u32, 3, 5].into_iter().enumerate() {
        let p = Integer::from(p);
        let a = num.remove_factor_mut(&p);
        let b = den.remove_factor_mut(&p);
        exps[i] = Integer::from(a) - b;
    }
    (exps, Rational::from_integers(num, den).expect("nonzero denominator"))
}

/// Exact `n`-th root of a nonnegative integer, if it exists.
fn exact_root(x: &Integer, n: u32) -> Option<Integer> {
    let (root, rem) = x.clone().root_rem(Integer::new(), n);
    if rem == 0 {
        Some(root)
    } else {
        None
    }
}

fn add_entry<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, e: &Rational) {
    if e.is_zero() {
        return;
    }
    let slot = map.entry(key).or_insert_with(Rational::zero);
    *slot += e;
    // remove zero entries lazily below
}

fn prune<K: Ord + Clone>(map: &mut BTreeMap<K, Rational>) {
    map.retain(|_, v| !v.is_zero());
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial {
            coefficient: Rational::one(),
            pi: Rational::zero(),
            generators: BTreeMap::new(),
            gammas: BTreeMap::new(),
            tail: None,
        }
    }

    pub fn pi_pow(e: Rational) -> Self {
        let mut m = Monomial::unit();
        m.pi = e;
        m
    }

    pub fn generator(g: Generator, e: Rational) -> Self {
        let mut m = Monomial::unit();
        add_entry(&mut m.generators, g, &e);
        m
    }

    pub fn gamma(symbol: GammaSymbol, e: Rational) -> Self {
        let mut m = Monomial::unit();
        add_entry(&mut m.gammas, symbol, &e);
        m
    }

    pub fn atom(a: ConstantAtom, e: &Rational) -> Self {
        let mut m = Monomial::unit();
        for (g, x) in a.rewrite() {
            add_entry(&mut m.generators, g, &(x * e));
        }
        prune(&mut m.generators);
        m
    }

    /// A positive rational; its 2, 3, 5 content moves into the generator map.
    pub fn rational(r: &Rational) -> Result<Self> {
        Monomial::rational_pow(r, &Rational::one())
    }

    /// `r^e` for a positive rational `r`.
    pub fn rational_pow(r: &Rational, e: &Rational) -> Result<Self> {
        if !r.is_positive() {
            return Err(Error::NonPositiveCoefficient(r.to_string()));
        }
        let (exps, rest) = split_smooth(r);
        let mut m = Monomial::unit();
        for (g, k) in [Generator::Two, Generator::Three, Generator::Five].into_iter().zip(exps) {
            add_entry(&mut m.generators, g, &(Rational::from(k) * e));
        }
        prune(&mut m.generators);
        if rest.is_one() || e.is_zero() {
            return Ok(m);
        }
        let p = e.numer().to_i64().ok_or_else(|| Error::Domain("exponent too large".into()))?;
        let qd = e.denom().to_u32().ok_or_else(|| Error::Domain("exponent too large".into()))?;
        match (exact_root(rest.numer(), qd), exact_root(rest.denom(), qd)) {
            (Some(a), Some(b)) => {
                m.coefficient = Rational::from_integers(a, b)?.pow_i(p)?;
            }
            _ => {
                let ball = BigBall::from_rational(TAIL_BITS + 32, &rest).pow_rational(e)?;
                m.tail = Some(ball.round_to(TAIL_BITS));
            }
        }
        Ok(m)
    }

    /// Wraps a positive ball as a pure numeric tail.
    pub fn from_tail(ball: BigBall) -> Result<Self> {
        if !ball.is_positive() {
            return Err(Error::Domain("numeric tail must be positive".into()));
        }
        let mut m = Monomial::unit();
        m.tail = Some(ball.round_to(TAIL_BITS));
        Ok(m)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn pi_exponent(&self) -> &Rational {
        &self.pi
    }

    pub fn generators(&self) -> &BTreeMap<Generator, Rational> {
        &self.generators
    }

    pub fn gammas(&self) -> &BTreeMap<GammaSymbol, Rational> {
        &self.gammas
    }

    pub fn tail(&self) -> Option<&BigBall> {
        self.tail.as_ref()
    }

    pub fn generator_exponent(&self, g: Generator) -> Rational {
        self.generators.get(&g).cloned().unwrap_or_default()
    }

    pub fn gamma_exponent(&self, s: &GammaSymbol) -> Rational {
        self.gammas.get(s).cloned().unwrap_or_default()
    }

    pub fn is_unit(&self) -> bool {
        self.coefficient.is_one()
            && self.pi.is_zero()
            && self.generators.is_empty()
            && self.gammas.is_empty()
            && self.tail.is_none()
    }

    /// True iff no gamma symbol and no power of pi remain.
    pub fn is_gamma_free(&self) -> bool {
        self.gammas.is_empty() && self.pi.is_zero()
    }

    /// The same monomial without its gamma factors.
    pub fn without_gammas(&self) -> Monomial {
        let mut m = self.clone();
        m.gammas.clear();
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = self.clone();
        m.coefficient *= &other.coefficient;
        m.pi += &other.pi;
        for (g, e) in &other.generators {
            add_entry(&mut m.generators, *g, e);
        }
        for (s, e) in &other.gammas {
            add_entry(&mut m.gammas, s.clone(), e);
        }
        prune(&mut m.generators);
        prune(&mut m.gammas);
        m.tail = match (&self.tail, &other.tail) {
            (Some(a), Some(b)) => Some(a.mul(b).round_to(TAIL_BITS)),
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (None, None) => None,
        };
        m
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            coefficient: self.coefficient.inv().expect("coefficient is positive"),
            pi: -&self.pi,
            generators: self.generators.iter().map(|(g, e)| (*g, -e)).collect(),
            gammas: self.gammas.iter().map(|(s, e)| (s.clone(), -e)).collect(),
            tail: self
                .tail
                .as_ref()
                .map(|t| t.recip().expect("tail is positive").round_to(TAIL_BITS)),
        }
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: &Rational) -> Monomial {
        if e.is_zero() {
            return Monomial::unit();
        }
        let mut m = Monomial::rational_pow(&self.coefficient, e).expect("coefficient is positive");
        m.pi = &self.pi * e;
        for (g, x) in &self.generators {
            add_entry(&mut m.generators, *g, &(x * e));
        }
        for (s, x) in &self.gammas {
            add_entry(&mut m.gammas, s.clone(), &(x * e));
        }
        prune(&mut m.generators);
        prune(&mut m.gammas);
        if let Some(t) = &self.tail {
            let p = t.pow_rational(e).expect("tail is positive").round_to(TAIL_BITS);
            m.tail = Some(match m.tail.take() {
                Some(u) => u.mul(&p).round_to(TAIL_BITS),
                None => p,
            });
        }
        m
    }

    /// Lowest common multiple of all exponent denominators (1 when there are none).
    pub fn exponent_lcm(&self) -> Integer {
        let mut l = Integer::from(1);
        let all = std::iter::once(&self.pi)
            .chain(self.generators.values())
            .chain(self.gammas.values());
        for e in all {
            l.lcm_mut(e.denom());
        }
        l
    }

    /// Parses the whitespace-separated factor notation used by the formula
    /// tables, e.g. `pi^1/2 sqrt2+1^1/2 3^-1/8 G(1/4)^-1`. The exponent follows
    /// the last `^` of a token.
    pub fn from_dsl(src: &str) -> Result<Monomial> {
        let mut factors = Vec::new();
        for token in src.split_whitespace() {
            let (name, exp) = match token.rfind('^') {
                Some(i) => (&token[..i], token[i + 1..].parse::<Rational>()?),
                None => (token, Rational::one()),
            };
            factors.push((Factor::from_name(name)?, exp));
        }
        canonicalize(&factors)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text(),
            Format::Latex => self.to_latex(),
            Format::Json => self.to_json(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        if !self.coefficient.is_one() {
            parts.push(self.coefficient.to_string());
        }
        if !self.pi.is_zero() {
            parts.push(format!("pi{}", text_exp(&self.pi)));
        }
        for (g, e) in &self.generators {
            if g.is_compound() {
                parts.push(format!("({}){}", g.name(), text_exp(e)));
            } else {
                parts.push(format!("{}{}", g.name(), text_exp(e)));
            }
        }
        for (s, e) in &self.gammas {
            parts.push(format!("Gamma({}){}", s.argument(), text_exp(e)));
        }
        if let Some(t) = &self.tail {
            parts.push(format!("<{} +/- {}>", t.mid_string(40), t.rad_string()));
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" * ")
        }
    }

    pub fn to_latex(&self) -> String {
        let mut surd = Vec::new();
        if !self.coefficient.is_one() {
            let c = &self.coefficient;
            if c.is_integer() {
                surd.push(c.to_string());
            } else {
                surd.push(format!(r"\frac{{{}}}{{{}}}", c.numer(), c.denom()));
            }
        }
        if !self.pi.is_zero() {
            surd.push(latex_power(r"\pi", false, &self.pi));
        }
        for (g, e) in &self.generators {
            surd.push(latex_power(g.latex(), g.is_compound(), e));
        }
        if let Some(t) = &self.tail {
            surd.push(format!(r"\left[{}\right]", t.mid_string(30)));
        }
        let gam: Vec<String> = self
            .gammas
            .iter()
            .map(|(s, e)| {
                let a = s.argument();
                let base = format!(r"\Gamma\!\left(\tfrac{{{}}}{{{}}}\right)", a.numer(), a.denom());
                if e.is_one() {
                    base
                } else {
                    format!("{base}^{{{e}}}")
                }
            })
            .collect();
        let s = surd.join(r"\,");
        let g = gam.join(r"\,");
        match (s.is_empty(), g.is_empty()) {
            (true, true) => "1".to_string(),
            (false, true) => s,
            (true, false) => g,
            (false, false) => format!(r"{s}\;{g}"),
        }
    }

    pub fn to_json_value(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("coefficient".into(), Value::String(self.coefficient.to_fraction_string()));
        obj.insert("pi".into(), Value::String(self.pi.to_fraction_string()));
        let gens: Map<String, Value> = self
            .generators
            .iter()
            .map(|(g, e)| (g.name().to_string(), Value::String(e.to_fraction_string())))
            .collect();
        obj.insert("generators".into(), Value::Object(gens));
        let gams: Map<String, Value> = self
            .gammas
            .iter()
            .map(|(s, e)| (s.argument().to_fraction_string(), Value::String(e.to_fraction_string())))
            .collect();
        obj.insert("gammas".into(), Value::Object(gams));
        if let Some(t) = &self.tail {
            let mut tail = Map::new();
            tail.insert("mid".into(), Value::String(t.mid().to_string_radix(10, None)));
            tail.insert("rad".into(), Value::String(t.rad().to_string_radix(10, None)));
            obj.insert("tail".into(), Value::Object(tail));
        }
        Value::Object(obj)
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(src: &str) -> Result<Monomial> {
        let v: Value = serde_json::from_str(src).map_err(|e| Error::Json(e.to_string()))?;
        Monomial::from_json_value(&v)
    }

    pub fn from_json_value(v: &Value) -> Result<Monomial> {
        let bad = |msg: &str| Error::Json(msg.to_string());
        let obj = v.as_object().ok_or_else(|| bad("expected an object"))?;
        for key in obj.keys() {
            if !["coefficient", "pi", "generators", "gammas", "tail"].contains(&key.as_str()) {
                return Err(bad(&format!("unknown field `{key}`")));
            }
        }
        let rat = |v: Option<&Value>, field: &str| -> Result<Rational> {
            v.and_then(Value::as_str)
                .ok_or_else(|| bad(&format!("field `{field}` must be a string")))?
                .parse()
        };
        let coefficient = rat(obj.get("coefficient"), "coefficient")?;
        let pi = rat(obj.get("pi"), "pi")?;
        let mut m = Monomial::rational(&coefficient)?;
        m.pi = pi;
        let gens = obj
            .get("generators")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("field `generators` must be an object"))?;
        for (name, e) in gens {
            let g = Generator::from_name(name)?;
            add_entry(&mut m.generators, g, &rat(Some(e), name)?);
        }
        let gams = obj
            .get("gammas")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("field `gammas` must be an object"))?;
        for (arg, e) in gams {
            let s = GammaSymbol::new(arg.parse()?)?;
            add_entry(&mut m.gammas, s, &rat(Some(e), arg)?);
        }
        prune(&mut m.generators);
        prune(&mut m.gammas);
        if let Some(t) = obj.get("tail") {
            let t = t.as_object().ok_or_else(|| bad("field `tail` must be an object"))?;
            let num = |field: &str, prec: u32| -> Result<Float> {
                let s = t
                    .get(field)
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad(&format!("tail field `{field}` must be a string")))?;
                let parsed = Float::parse(s).map_err(|e| bad(&e.to_string()))?;
                Ok(Float::with_val(prec, parsed))
            };
            let ball = BigBall::with_radius(num("mid", TAIL_BITS)?, &num("rad", 64)?);
            m = m.mul(&Monomial::from_tail(ball)?);
        }
        Ok(m)
    }
}

fn text_exp(e: &Rational) -> String {
    if e.is_one() {
        String::new()
    } else if e.is_integer() {
        format!("^{e}")
    } else {
        format!("^({e})")
    }
}

fn latex_power(body: &str, compound: bool, e: &Rational) -> String {
    if *e == crate::rational::q(1, 2) {
        return format!(r"\sqrt{{{body}}}");
    }
    let base = if compound {
        format!(r"\left({body}\right)")
    } else {
        body.to_string()
    };
    if e.is_one() {
        base
    } else {
        format!("{base}^{{{e}}}")
    }
}

/// Output formats shared by monomial rendering and the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Latex,
    Json,
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Builds the canonical monomial of a product of raw factors.
pub fn canonicalize(raw: &[(Factor, Rational)]) -> Result<Monomial> {
    let mut m = Monomial::unit();
    for (factor, e) in raw {
        let term = match factor {
            Factor::Atom(a) => Monomial::atom(*a, e),
            Factor::Pi => Monomial::pi_pow(e.clone()),
            Factor::Gamma(s) => Monomial::gamma(s.clone(), e.clone()),
            Factor::Rational(r) => Monomial::rational_pow(r, e)?,
        };
        m = m.mul(&term);
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn atom(name: &str, e: Rational) -> (Factor, Rational) {
        (Factor::from_name(name).unwrap(), e)
    }

    #[test]
    fn phi_times_phi_star_is_twenty() {
        let m = canonicalize(&[atom("phi", q(1, 1)), atom("phi*", q(1, 1))]).unwrap();
        assert_eq!(m, Monomial::rational(&q(20, 1)).unwrap());
        assert_eq!(m.generator_exponent(Generator::Two), q(2, 1));
        assert_eq!(m.generator_exponent(Generator::Five), q(1, 1));
        assert!(m.coefficient().is_one());
    }

    #[test]
    fn conjugates_cancel() {
        let m = canonicalize(&[atom("sqrt2+1", q(1, 1)), atom("sqrt2-1", q(1, 1))]).unwrap();
        assert!(m.is_unit());
        let m = canonicalize(&[atom("psi", q(1, 1)), atom("psi*", q(1, 1))]).unwrap();
        assert_eq!(m, Monomial::generator(Generator::Five, q(1, 2)));
    }

    #[test]
    fn sqrt15_minus_psi() {
        let m = canonicalize(&[atom("sqrt15-psi", q(1, 1))]).unwrap();
        let want = Monomial::from_dsl("2^3 5 phi^-1 sqrt15+psi^-1").unwrap();
        assert_eq!(m, want);
        assert_eq!(m.generators().len(), 4);
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(
            canonicalize(&[(Factor::Rational(q(-2, 1)), q(1, 1))]),
            Err(Error::NonPositiveCoefficient(_))
        ));
        assert!(matches!(Factor::from_name("sqrt7+1"), Err(Error::UnknownAtom(_))));
        assert!(matches!(Factor::from_name("G(1/7)"), Err(Error::InvalidGammaSymbol(_))));
    }

    #[test]
    fn coefficient_keeps_only_primes_beyond_five() {
        let m = Monomial::rational(&q(360, 77)).unwrap();
        assert_eq!(m.coefficient(), &q(1, 77));
        assert_eq!(m.generator_exponent(Generator::Two), q(3, 1));
        assert_eq!(m.generator_exponent(Generator::Three), q(2, 1));
        assert_eq!(m.generator_exponent(Generator::Five), q(1, 1));
    }

    #[test]
    fn powers() {
        let g = GammaSymbol::new(q(1, 4)).unwrap();
        let m = Monomial::gamma(g.clone(), q(1, 1))
            .mul(&Monomial::pi_pow(q(-1, 4)))
            .mul(&Monomial::rational(&q(1, 2)).unwrap());
        let sq = m.pow(&q(2, 1));
        assert_eq!(sq.gamma_exponent(&g), q(2, 1));
        assert_eq!(sq.pi_exponent(), &q(-1, 2));
        assert_eq!(sq.generator_exponent(Generator::Two), q(-2, 1));
        assert!(m.pow(&Rational::zero()).is_unit());
        let cube_root = Monomial::generator(Generator::Two, q(1, 3));
        assert_eq!(cube_root.pow(&q(3, 1)), Monomial::rational(&q(2, 1)).unwrap());
        // 49^(1/2) is exact, 7^(1/2) goes to the tail
        assert_eq!(Monomial::rational_pow(&q(49, 1), &q(1, 2)).unwrap().coefficient(), &q(7, 1));
        assert!(Monomial::rational_pow(&q(7, 1), &q(1, 2)).unwrap().tail().is_some());
    }

    #[test]
    fn renderings() {
        assert_eq!(Monomial::unit().to_text(), "1");
        assert_eq!(Monomial::unit().to_latex(), "1");
        let m = Monomial::from_dsl("pi 2^1/2 G(1/4)^-1").unwrap();
        assert_eq!(m.to_text(), "pi * 2^(1/2) * Gamma(1/4)^-1");
        assert_eq!(m.to_latex(), r"\pi\,\sqrt{2}\;\Gamma\!\left(\tfrac{1}{4}\right)^{-1}");
        assert_eq!(
            m.to_json(),
            r#"{"coefficient":"1/1","pi":"1/1","generators":{"2":"1/2"},"gammas":{"1/4":"-1/1"}}"#
        );
    }

    #[test]
    fn json_round_trip_with_tail() {
        let m = Monomial::rational_pow(&q(7, 11), &q(1, 3))
            .unwrap()
            .mul(&Monomial::from_dsl("sqrt10+sqrt(phi)^-1/2 G(7/120)^3").unwrap());
        let back = Monomial::from_json(&m.to_json()).unwrap();
        assert_eq!(back, m);
        assert!(Monomial::from_json(r#"{"coefficient":"1/1"}"#).is_err());
    }
}
