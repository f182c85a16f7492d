//! The reduction table: every `Gamma(k/n)`, `n | 24` or `n | 60`, as a monomial
//! over the ten basis values.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use serde_json::{Map, Value};

use crate::atoms::GammaSymbol;
use crate::monomial::Monomial;
use crate::rational::{q, Rational};

/// `(k, n, monomial)` for every non-basis point.
const ENTRIES: &[(i64, i64, &str)] = &[
    (1, 2, "pi^1/2"),
    (2, 3, "2 pi 3^-1/2 G(1/3)^-1"),
    (3, 4, "pi 2^1/2 G(1/4)^-1"),
    (1, 6, "3^1/2 pi^-1/2 2^-1/3 G(1/3)^2"),
    (3, 5, "pi 2^1/2 phi*^1/2 5^-1/2 G(2/5)^-1"),
    (5, 6, "pi^3/2 2^4/3 3^-1/2 G(1/3)^-2"),
    (4, 5, "pi 2^1/2 phi^1/2 5^-1/2 G(1/5)^-1"),
    (3, 8, "pi^1/2 sqrt2-1^1/2 G(1/4)^-1 G(1/8)"),
    (5, 8, "pi^1/2 2^3/4 G(1/4) G(1/8)^-1"),
    (7, 8, "pi 2^3/4 sqrt2+1^1/2 G(1/8)^-1"),
    (1, 10, "phi^1/2 pi^-1/2 2^-7/10 G(1/5) G(2/5)"),
    (3, 10, "pi^1/2 phi* 2^-3/5 5^-1/2 G(1/5) G(2/5)^-1"),
    (7, 10, "pi^1/2 2^3/5 G(1/5)^-1 G(2/5)"),
    (9, 10, "pi^3/2 2^7/10 phi^1/2 5^-1/2 G(1/5)^-1 G(2/5)^-1"),
    (1, 12, "3^3/8 sqrt3+1^1/2 pi^-1/2 2^-1/4 G(1/3) G(1/4)"),
    (5, 12, "pi^1/2 2^1/4 sqrt3-1^1/2 3^-1/8 G(1/4) G(1/3)^-1"),
    (7, 12, "pi^1/2 2^1/4 3^1/8 sqrt3-1^1/2 G(1/3) G(1/4)^-1"),
    (11, 12, "pi^3/2 2^3/4 sqrt3+1^1/2 3^-3/8 G(1/3)^-1 G(1/4)^-1"),
    (2, 15, "phi*^1/2 sqrt15-psi*^1/2 2^-1 3^-7/20 5^-1/3 G(1/3)^-1 G(2/5) G(1/15)"),
    (4, 15, "phi^1/2 sqrt15-psi^1/2 sqrt15-psi*^1/2 2^-3/2 3^-3/10 5^-1/2 G(1/5)^-1 G(2/5) G(1/15)"),
    (7, 15, "3^9/20 phi*^1/2 sqrt15+psi*^1/2 2^-1 5^-1/6 G(1/3) G(1/5) G(1/15)^-1"),
    (8, 15, "pi 2^1/2 sqrt15-psi^1/2 3^-9/20 5^-1/3 G(1/3)^-1 G(1/5)^-1 G(1/15)"),
    (11, 15, "2 pi 3^3/10 G(1/5) G(2/5)^-1 G(1/15)^-1"),
    (13, 15, "pi 2^1/2 3^7/20 sqrt15+psi^1/2 5^-1/6 G(1/3) G(2/5)^-1 G(1/15)^-1"),
    (14, 15, "pi phi^1/2 sqrt15+psi^1/2 sqrt15+psi*^1/2 2^-1/2 5^-1/2 G(1/15)^-1"),
    (3, 20, "pi^1/2 phi* sqrt10-sqrt(phi*)^1/2 2^-21/20 5^-7/8 G(2/5)^-1 G(1/20)"),
    (7, 20, "pi^1/2 sqrt10-sqrt(phi)^1/2 2^-3/20 5^-3/8 G(1/5)^-1 G(1/20)"),
    (9, 20, "pi sqrt10-sqrt(phi)^1/2 sqrt10-sqrt(phi*)^1/2 2^-1/5 5^-1/2 G(1/5)^-1 G(2/5)^-1 G(1/20)"),
    (11, 20, "2^1/5 phi^1/2 G(1/5) G(2/5) G(1/20)^-1"),
    (13, 20, "pi^1/2 2^3/20 phi*^1/2 sqrt10+sqrt(phi*)^1/2 5^-1/8 G(1/5) G(1/20)^-1"),
    (17, 20, "pi^1/2 2^1/20 phi^1/2 sqrt10+sqrt(phi)^1/2 5^-1/8 G(2/5) G(1/20)^-1"),
    (19, 20, "pi phi^1/2 sqrt10+sqrt(phi)^1/2 sqrt10+sqrt(phi*)^1/2 5^-1/2 G(1/20)^-1"),
    (5, 24, "pi^1/2 sqrt2-1^1/2 sqrt3-1^1/2 2^-1/6 3^-1/2 G(1/3)^-1 G(1/24)"),
    (7, 24, "pi^1/2 sqrt3-1^1/2 sqrt3-sqrt2^1/2 2^-1/4 3^-3/8 G(1/4)^-1 G(1/24)"),
    (11, 24, "pi 2^1/12 sqrt2-1^1/2 sqrt3-sqrt2^1/2 3^-3/8 G(1/3)^-1 G(1/4)^-1 G(1/24)"),
    (13, 24, "2^2/3 3^3/8 sqrt3+1^1/2 G(1/3) G(1/4) G(1/24)^-1"),
    (17, 24, "2 pi^1/2 3^3/8 sqrt2+1^1/2 G(1/4) G(1/24)^-1"),
    (19, 24, "pi^1/2 2^11/12 3^1/2 sqrt3+sqrt2^1/2 G(1/3) G(1/24)^-1"),
    (23, 24, "pi 2^3/4 sqrt2+1^1/2 sqrt3+1^1/2 sqrt3+sqrt2^1/2 G(1/24)^-1"),
    (1, 30, "3^9/20 phi^1/2 sqrt15+psi^1/2 pi^-1/2 2^-16/15 5^-1/6 G(1/3) G(1/5)"),
    (7, 30, "3^3/20 phi*^1/2 sqrt15+psi*^1/2 pi^-1/2 2^-22/15 5^-1/6 G(1/3) G(2/5)"),
    (11, 30, "pi^1/2 phi^1/2 sqrt15-psi^1/2 2^-11/15 3^-1/20 5^-1/3 G(1/3)^-1 G(1/5)"),
    (13, 30, "pi^1/2 3^7/20 phi* sqrt15-psi*^1/2 2^-41/30 5^-2/3 G(1/3) G(2/5)^-1"),
    (17, 30, "pi^1/2 phi*^1/2 sqrt15-psi*^1/2 2^-2/15 3^-7/20 5^-1/3 G(1/3)^-1 G(2/5)"),
    (19, 30, "pi^1/2 3^1/20 phi sqrt15-psi^1/2 2^-23/30 5^-2/3 G(1/3) G(1/5)^-1"),
    (23, 30, "pi^3/2 phi* sqrt15+psi*^1/2 2^-1/30 3^-3/20 5^-5/6 G(1/3)^-1 G(2/5)^-1"),
    (29, 30, "pi^3/2 phi sqrt15+psi^1/2 2^-13/30 3^-9/20 5^-5/6 G(1/3)^-1 G(1/5)^-1"),
    (11, 60, "pi^1/2 phi^1/2 sqrt15-psi^1/2 sqrt10-sqrt(phi)^1/2 2^-5/4 3^-1/2 5^-17/24 G(1/3)^-1 G(1/60)"),
    (13, 60, "pi^1/2 phi*^1/2 sqrt3+1^1/2 sqrt5-sqrt3^1/2 sqrt15-psi*^1/2 2^-13/10 3^-3/20 5^-3/8 G(2/5)^-1 G(7/60)"),
    (17, 60, "pi^1/2 phi*^1/2 sqrt15-psi*^1/2 sqrt10-sqrt(phi*)^1/2 2^-3/4 3^-1/2 5^-11/24 G(1/3)^-1 G(7/60)"),
    (19, 60, "pi^1/2 phi^1/2 sqrt3-1^1/2 sqrt5-sqrt3^1/2 sqrt15-psi^1/2 2^-7/5 3^-9/20 5^-5/8 G(1/5)^-1 G(1/60)"),
    (23, 60, "pi phi*^1/2 sqrt3+1^1/2 sqrt5-sqrt3^1/2 sqrt10-sqrt(phi*)^1/2 2^-11/20 3^-3/20 5^-7/12 G(1/3)^-1 G(2/5)^-1 G(7/60)"),
    (29, 60, "pi phi^1/2 sqrt3-1^1/2 sqrt5-sqrt3^1/2 sqrt10-sqrt(phi)^1/2 2^-23/20 3^-9/20 5^-7/12 G(1/3)^-1 G(1/5)^-1 G(1/60)"),
    (31, 60, "3^9/20 phi^1/2 sqrt15+psi^1/2 2^-1/10 5^-1/6 G(1/3) G(1/5) G(1/60)^-1"),
    (37, 60, "3^3/20 phi*^1/2 sqrt15+psi*^1/2 2^-7/10 5^-1/6 G(1/3) G(2/5) G(7/60)^-1"),
    (41, 60, "pi^1/2 2^3/20 3^9/20 phi^1/2 sqrt10+sqrt(phi)^1/2 5^-1/8 G(1/5) G(1/60)^-1"),
    (43, 60, "pi^1/2 3^1/2 phi*^1/2 sqrt3-1^1/2 sqrt5+sqrt3^1/2 2^-1/2 5^-7/24 G(1/3) G(7/60)^-1"),
    (47, 60, "pi^1/2 2^1/20 3^3/20 phi*^1/2 sqrt10+sqrt(phi*)^1/2 5^-3/8 G(2/5) G(7/60)^-1"),
    (49, 60, "pi^1/2 3^1/2 phi^1/2 sqrt3+1^1/2 sqrt5+sqrt3^1/2 5^-1/24 G(1/3) G(1/60)^-1"),
    (53, 60, "pi phi* sqrt3-1^1/2 sqrt5+sqrt3^1/2 sqrt15+psi*^1/2 sqrt10+sqrt(phi*)^1/2 2^-5/4 5^-3/4 G(7/60)^-1"),
    (59, 60, "pi phi sqrt3+1^1/2 sqrt5+sqrt3^1/2 sqrt15+psi^1/2 sqrt10+sqrt(phi)^1/2 2^-5/4 5^-3/4 G(1/60)^-1"),
];

#[derive(Clone, Debug, PartialEq)]
pub struct ReductionTable {
    pub entries: BTreeMap<Rational, Monomial>,
}

impl ReductionTable {
    pub fn get(&self, x: &Rational) -> Option<&Monomial> {
        self.entries.get(x)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries whose reduced denominator divides `n`.
    pub fn with_denominator_dividing(&self, n: u32) -> Vec<(&Rational, &Monomial)> {
        self.entries.iter().filter(|(x, _)| n % x.denom().to_u32().unwrap_or(0) == 0).collect()
    }

    /// `{"k/n": <monomial json>, ...}` in increasing argument order.
    pub fn to_json_value(&self) -> Value {
        let map: Map<String, Value> = self.entries.iter().map(|(x, m)| (x.to_fraction_string(), m.to_json_value())).collect();
        Value::Object(map)
    }

    /// One `\Gamma(k/n) &=& ... \\` line per entry.
    pub fn to_latex(&self) -> String {
        let mut out = String::from("\\begin{eqnarray*}\n");
        for (x, m) in &self.entries {
            out.push_str(&format!(
                "\\Gamma\\!\\left(\\tfrac{{{}}}{{{}}}\\right) &=& {} \\\\\n",
                x.numer(),
                x.denom(),
                m.to_latex()
            ));
        }
        out.push_str("\\end{eqnarray*}\n");
        out
    }
}

static TABLE: LazyLock<ReductionTable> = LazyLock::new(|| {
    let mut entries: BTreeMap<Rational, Monomial> = ENTRIES
        .iter()
        .map(|&(k, n, src)| (q(k, n), Monomial::from_dsl(src).expect("valid table entry")))
        .collect();
    for s in GammaSymbol::basis() {
        entries.insert(s.argument().clone(), Monomial::gamma(s, Rational::one()));
    }
    ReductionTable { entries }
});

/// The hardcoded table, including the basis points mapped to themselves.
pub fn hardcoded_table() -> &'static ReductionTable {
    &TABLE
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trig::circle::supported_denominator;
    use rug::Integer;

    #[test]
    fn covers_every_point() {
        let t = hardcoded_table();
        let mut expected = 0;
        for n in 2..=60i64 {
            for k in 1..n {
                let x = q(k, n);
                if x.denom() == &Integer::from(n) && supported_denominator(&Integer::from(n)) {
                    expected += 1;
                    assert!(t.get(&x).is_some(), "{x}");
                }
            }
        }
        assert_eq!(t.len(), expected);
    }

    #[test]
    fn examples() {
        let t = hardcoded_table();
        assert_eq!(t.get(&q(1, 2)).unwrap(), &Monomial::pi_pow(q(1, 2)));
        assert_eq!(t.get(&q(2, 3)).unwrap(), &Monomial::from_dsl("2 pi 3^-1/2 G(1/3)^-1").unwrap());
        assert_eq!(t.get(&q(1, 4)).unwrap(), &Monomial::from_dsl("G(1/4)").unwrap());
        let e = Monomial::from_dsl("pi 2^3/4 sqrt2+1^1/2 sqrt3+1^1/2 sqrt3+sqrt2^1/2 G(1/24)^-1").unwrap();
        assert_eq!(t.get(&q(23, 24)).unwrap(), &e);
    }

    #[test]
    fn exports() {
        let t = hardcoded_table();
        let v = t.to_json_value();
        assert_eq!(v.as_object().unwrap().len(), t.len());
        assert!(t.to_latex().contains("\\Gamma\\!\\left(\\tfrac{3}{4}\\right)"));
    }
}
