//! Gamma-term expressions such as `Gamma(1/3)^2 * Gamma(2/3) / pi`.
//!
//! ```text
//! expr    := factor (('*' | '/') factor)*
//! factor  := primary ('^' exponent)?
//! primary := 'Gamma(' rational ')' | 'pi' | integer | '(' expr ')'
//! exponent:= rational | '(' rational ')'
//! rational:= '-'? digits ('/' digits)?
//! ```
//!
//! Whitespace is ignored. A rational literal is read greedily after `^` and
//! inside `Gamma(...)`, so `2^1/2` and `2^1 / 2` are both `2^(1/2)`; elsewhere
//! `/` is division. Rendering puts every exponent in parentheses so that a
//! rendered tree parses back to itself. Error offsets are 1-based character
//! positions.

use std::fmt;

use gammaval::relations::simplify_gamma_term;
use gammaval::{Error, Monomial, Rational, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Primary {
    Gamma(Rational),
    Pi,
    Integer(Rational),
    Group(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Power(Primary, Rational),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
}

impl Expr {
    /// `(argument, exponent)` for every gamma factor, outermost first, and
    /// the product of the remaining factors.
    fn flatten(&self, scale: &Rational, gammas: &mut Vec<(Rational, Rational)>, rest: &mut Monomial) -> Result<()> {
        match self {
            Expr::Power(p, e) => {
                let e = e * scale;
                match p {
                    Primary::Gamma(x) => gammas.push((x.clone(), e)),
                    Primary::Pi => *rest = rest.mul(&Monomial::pi_pow(e)),
                    Primary::Integer(n) => {
                        if n.is_zero() {
                            return Err(Error::DivisionByZero);
                        }
                        *rest = rest.mul(&Monomial::rational_pow(n, &e)?);
                    }
                    Primary::Group(inner) => inner.flatten(&e, gammas, rest)?,
                }
            }
            Expr::Mul(a, b) => {
                a.flatten(scale, gammas, rest)?;
                b.flatten(scale, gammas, rest)?;
            }
            Expr::Div(a, b) => {
                a.flatten(scale, gammas, rest)?;
                b.flatten(&-scale.clone(), gammas, rest)?;
            }
        }
        Ok(())
    }

    /// The canonical monomial of the expression.
    pub fn to_monomial(&self) -> Result<Monomial> {
        let mut gammas = Vec::new();
        let mut rest = Monomial::unit();
        self.flatten(&Rational::one(), &mut gammas, &mut rest)?;
        Ok(simplify_gamma_term(&gammas)?.mul(&rest))
    }

    /// Number of top-level factors of a product.
    pub fn factors(&self) -> Vec<&Expr> {
        match self {
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                let mut v = a.factors();
                v.push(b);
                v
            }
            e => vec![e],
        }
    }
}

fn exponent_text(e: &Rational) -> String {
    if e.is_one() {
        String::new()
    } else {
        format!("^({e})")
    }
}

impl fmt::Display for Primary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Primary::Gamma(x) => write!(f, "Gamma({x})"),
            Primary::Pi => f.write_str("pi"),
            Primary::Integer(n) => write!(f, "{}", n.numer()),
            Primary::Group(e) => write!(f, "({e})"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let right = |f: &mut fmt::Formatter<'_>, b: &Expr| match b {
            Expr::Power(..) => write!(f, "{b}"),
            _ => write!(f, "({b})"),
        };
        match self {
            Expr::Power(p, e) => write!(f, "{p}{}", exponent_text(e)),
            Expr::Mul(a, b) => {
                write!(f, "{a} * ")?;
                right(f, b)
            }
            Expr::Div(a, b) => {
                write!(f, "{a} / ")?;
                right(f, b)
            }
        }
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

fn syntax(offset: usize, expected: &[&str]) -> Error {
    Error::Syntax { offset, expected: expected.iter().map(|s| s.to_string()).collect() }
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    /// 1-based offset of the next significant character.
    fn offset(&mut self) -> usize {
        self.skip_ws();
        self.pos + 1
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(syntax(self.offset(), &[&c.to_string()]))
        }
    }

    fn digits(&mut self) -> Option<String> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.chars[start..self.pos].iter().collect())
    }

    fn rational(&mut self) -> Result<Rational> {
        let start = self.offset();
        let negative = self.peek() == Some('-');
        if negative {
            self.pos += 1;
        }
        let num = self.digits().ok_or_else(|| syntax(self.offset(), &["integer"]))?;
        let mut text = if negative { format!("-{num}") } else { num };
        let save = self.pos;
        if self.peek() == Some('/') {
            self.pos += 1;
            match self.digits() {
                Some(den) => text = format!("{text}/{den}"),
                None => self.pos = save,
            }
        }
        text.parse::<Rational>().map_err(|_| syntax(start, &["nonzero denominator"]))
    }

    fn keyword(&mut self, word: &str) -> bool {
        self.skip_ws();
        let w: Vec<char> = word.chars().collect();
        if self.chars[self.pos..].starts_with(&w) {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn primary(&mut self) -> Result<Primary> {
        let expected = ["Gamma(", "pi", "integer", "("];
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(Primary::Group(Box::new(e)))
            }
            Some(c) if c.is_ascii_digit() => {
                let d = self.digits().expect("digit present");
                Ok(Primary::Integer(d.parse::<Rational>()?))
            }
            Some(_) if self.keyword("Gamma") => {
                self.expect('(')?;
                let x = self.rational()?;
                self.expect(')')?;
                Ok(Primary::Gamma(x))
            }
            Some(_) if self.keyword("pi") => Ok(Primary::Pi),
            _ => Err(syntax(self.offset(), &expected)),
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let p = self.primary()?;
        let e = if self.peek() == Some('^') {
            self.pos += 1;
            if self.peek() == Some('(') {
                self.pos += 1;
                let r = self.rational()?;
                self.expect(')')?;
                r
            } else {
                self.rational()?
            }
        } else {
            Rational::one()
        };
        Ok(Expr::Power(p, e))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = Expr::Mul(Box::new(acc), Box::new(self.factor()?));
                }
                Some('/') => {
                    self.pos += 1;
                    acc = Expr::Div(Box::new(acc), Box::new(self.factor()?));
                }
                _ => return Ok(acc),
            }
        }
    }
}

/// Parses a whole gamma-term expression.
pub fn parse_expr(input: &str) -> Result<Expr> {
    let mut p = Parser { chars: input.chars().collect(), pos: 0 };
    let e = p.expr()?;
    if p.peek().is_some() {
        return Err(syntax(p.offset(), &["*", "/", "^", "end of input"]));
    }
    Ok(e)
}

/// Parses a signed rational literal `k/n`, for command-line arguments.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let mut p = Parser { chars: input.chars().collect(), pos: 0 };
    let r = p.rational()?;
    if p.peek().is_some() {
        return Err(syntax(p.offset(), &["end of input"]));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use gammaval::q;

    #[test]
    fn three_factors() {
        let e = parse_expr("Gamma(1/3)^2 * Gamma(2/3) / pi").unwrap();
        let f = e.factors();
        assert_eq!(f.len(), 3);
        assert_eq!(f[0], &Expr::Power(Primary::Gamma(q(1, 3)), q(2, 1)));
        assert_eq!(e.to_monomial().unwrap(), Monomial::from_dsl("2 3^-1/2 G(1/3)").unwrap());
    }

    #[test]
    fn single_gamma() {
        let e = parse_expr("Gamma(1/2)").unwrap();
        assert_eq!(e, Expr::Power(Primary::Gamma(q(1, 2)), q(1, 1)));
        assert_eq!(e.to_monomial().unwrap(), Monomial::pi_pow(q(1, 2)));
    }

    #[test]
    fn syntax_errors() {
        let err = parse_expr("Gamma(1/3").unwrap_err();
        assert_eq!(err, Error::Syntax { offset: 10, expected: vec![")".into()] });
        assert!(matches!(parse_expr("Gamma(1/3) *"), Err(Error::Syntax { offset: 13, .. })));
        assert!(matches!(parse_expr("pi pi"), Err(Error::Syntax { offset: 4, .. })));
        assert!(matches!(parse_expr("Gamma(1/0)"), Err(Error::Syntax { offset: 7, .. })));
    }

    #[test]
    fn exponents_and_groups() {
        let e = parse_expr(" ( Gamma(1/4) * 2 )^-1/2 / 3 ").unwrap();
        assert_eq!(e.to_string(), "(Gamma(1/4) * 2)^(-1/2) / 3");
        let e = parse_expr("pi / (2 / 3)").unwrap();
        assert_eq!(e.to_monomial().unwrap(), Monomial::from_dsl("3/2 pi").unwrap());
        assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("-1/12").unwrap(), q(-1, 12));
        assert_eq!(parse_rational(" 4 ").unwrap(), q(4, 1));
        assert!(parse_rational("1/2x").is_err());
    }
}
