//! Replays the standard-equation sequence that determines every gamma value
//! at denominators dividing 24 or 60 from the ten basis values, by exact
//! elimination with gamma-free monomials as constants.

use std::collections::BTreeMap;

use super::relation::FunctionalRelation;
use super::table::ReductionTable;
use crate::atoms::GammaSymbol;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::monomial::Monomial;
use crate::rational::{q, Rational};

/// One equation of a sequence: R(x) is reflection, M_n(x) multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Formula {
    R(i64, i64),
    M(u32, i64, i64),
}

impl Formula {
    pub fn relation(self) -> Result<FunctionalRelation> {
        match self {
            Formula::R(k, n) => FunctionalRelation::reflection(&q(k, n)),
            Formula::M(m, k, n) => FunctionalRelation::multiplication(m, &q(k, n)),
        }
    }
}

/// A single equation, or several equations solved together.
#[derive(Clone, Debug)]
pub enum Group {
    Single(Formula),
    Block(Vec<Formula>),
}

/// Points determined by one group, in the order they were solved.
#[derive(Clone, Debug)]
pub struct Step {
    pub equations: Vec<String>,
    pub determined: Vec<Rational>,
}

/// The equations for denominators dividing 24 or 60, grouped as they are solved.
pub fn table_sequence() -> Vec<Group> {
    use Formula::*;
    use Group::*;
    let singles = |v: &[Formula]| v.iter().map(|e| Single(*e)).collect::<Vec<_>>();
    let mut g = singles(&[
        R(1, 2),
        R(1, 3),
        R(1, 4),
        R(1, 5),
        R(2, 5),
        M(2, 1, 6),
        R(1, 6),
        M(2, 1, 8),
        R(1, 8),
        R(3, 8),
        M(2, 1, 5),
        M(2, 1, 10),
        R(1, 10),
        R(3, 10),
    ]);
    g.push(Block(vec![M(3, 1, 12), M(2, 1, 12), R(1, 12), R(5, 12)]));
    g.extend(singles(&[M(3, 1, 15), R(1, 15), R(4, 15)]));
    g.push(Block(vec![M(5, 1, 15), M(3, 2, 15), R(2, 15), R(7, 15)]));
    g.extend(singles(&[M(2, 1, 20), R(1, 20), R(9, 20)]));
    g.push(Block(vec![M(5, 1, 20), M(2, 3, 20), R(3, 20), R(7, 20)]));
    g.extend(singles(&[
        M(3, 1, 24),
        M(2, 1, 24),
        M(2, 5, 24),
        R(1, 24),
        R(5, 24),
        R(7, 24),
        R(11, 24),
        M(2, 1, 15),
        M(2, 2, 15),
        M(2, 1, 30),
        M(2, 7, 30),
        R(1, 30),
        R(7, 30),
        R(11, 30),
        R(13, 30),
        M(3, 1, 60),
        M(3, 7, 60),
        M(2, 1, 60),
        M(2, 7, 60),
        M(2, 11, 60),
        R(13, 60),
        M(2, 13, 60),
        R(1, 60),
        R(7, 60),
        R(11, 60),
        R(17, 60),
        R(19, 60),
        R(23, 60),
        R(29, 60),
    ]));
    g
}

fn label(e: Formula) -> String {
    match e {
        Formula::R(k, n) => format!("R({k}/{n})"),
        Formula::M(m, k, n) => format!("M{m}({k}/{n})"),
    }
}

/// Known gamma values, extended one group at a time.
pub struct Solver {
    pub known: BTreeMap<Rational, Monomial>,
    pub steps: Vec<Step>,
}

impl Solver {
    /// Starts from the given symbols mapped to themselves.
    pub fn new(symbols: &[GammaSymbol]) -> Self {
        let known = symbols
            .iter()
            .map(|s| (s.argument().clone(), Monomial::gamma(s.clone(), Rational::one())))
            .collect();
        Solver { known, steps: Vec::new() }
    }

    /// Solves a group: its unknowns must be as many as its equations, with a
    /// nonsingular coefficient matrix. Rational exponents in the solution are
    /// the square-root steps; positivity fixes the root.
    pub fn solve(&mut self, group: &Group) -> Result<Vec<Rational>> {
        let eqs = match group {
            Group::Single(e) => vec![*e],
            Group::Block(v) => v.clone(),
        };
        let names: Vec<String> = eqs.iter().map(|e| label(*e)).collect();
        let mut unknowns: Vec<Rational> = Vec::new();
        let mut constants = Vec::new();
        let mut rows: Vec<BTreeMap<Rational, Rational>> = Vec::new();
        for e in &eqs {
            let rel = e.relation()?;
            let mut constant = rel.rhs.clone();
            let mut row = BTreeMap::new();
            for (a, x) in &rel.lhs {
                match self.known.get(a) {
                    Some(m) => constant = constant.div(&m.pow(x)),
                    None => {
                        if !unknowns.contains(a) {
                            unknowns.push(a.clone());
                        }
                        row.insert(a.clone(), x.clone());
                    }
                }
            }
            constants.push(constant);
            rows.push(row);
        }
        unknowns.sort();
        if unknowns.len() != eqs.len() {
            return Err(Error::SingularSystem(format!(
                "{} has {} unknowns for {} equations",
                names.join(", "),
                unknowns.len(),
                eqs.len()
            )));
        }
        let a: Matrix = rows
            .iter()
            .map(|row| unknowns.iter().map(|u| row.get(u).cloned().unwrap_or_default()).collect())
            .collect();
        let inv = linalg::inverse(&a).ok_or_else(|| Error::SingularSystem(names.join(", ")))?;
        let mut determined = Vec::new();
        for (j, u) in unknowns.iter().enumerate() {
            let mut value = Monomial::unit();
            for (i, c) in constants.iter().enumerate() {
                value = value.mul(&c.pow(&inv[j][i]));
            }
            self.known.insert(u.clone(), value);
            determined.push(u.clone());
        }
        // report in equation order
        if eqs.len() == 1 {
            determined = unknowns.clone();
        }
        self.steps.push(Step { equations: names, determined: determined.clone() });
        Ok(determined)
    }

    /// Fills `1 - x` for every known `x` whose partner is missing.
    pub fn reflection_sweep(&mut self, n: i64) -> Result<()> {
        for k in 1..n {
            let x = q(k, n);
            if x.denom() != &rug::Integer::from(n) || self.known.contains_key(&x) {
                continue;
            }
            if self.known.contains_key(&(&Rational::one() - &x)) {
                let step = if k < n - k { Formula::R(k, n) } else { Formula::R(n - k, n) };
                self.solve(&Group::Single(step))?;
            }
        }
        Ok(())
    }
}

/// Runs the full sequence; returns the derived table and the step log.
pub fn derive_with_steps() -> Result<(ReductionTable, Vec<Step>)> {
    let mut s = Solver::new(&GammaSymbol::basis());
    for g in table_sequence() {
        s.solve(&g)?;
    }
    Ok((ReductionTable { entries: s.known }, s.steps))
}

/// The reduction table for denominators dividing 24 or 60, derived from the
/// standard equations.
pub fn derive_table() -> Result<ReductionTable> {
    derive_with_steps().map(|(t, _)| t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::table::hardcoded_table;

    #[test]
    fn first_fourteen_steps() {
        let (_, steps) = derive_with_steps().unwrap();
        let got: Vec<Rational> = steps[..14].iter().flat_map(|s| s.determined.clone()).collect();
        let want: Vec<Rational> = [
            (1, 2), (2, 3), (3, 4), (4, 5), (3, 5), (1, 6), (5, 6), (5, 8), (7, 8), (3, 8), (7, 10), (1, 10), (9, 10), (3, 10),
        ]
        .iter()
        .map(|&(k, n)| q(k, n))
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn later_single_steps() {
        let (_, steps) = derive_with_steps().unwrap();
        let singles: Vec<Rational> = steps[23..].iter().flat_map(|s| s.determined.clone()).collect();
        let want: Vec<Rational> = [
            (17, 24), (13, 24), (5, 24), (23, 24), (19, 24), (7, 24), (11, 24), (17, 30), (19, 30), (1, 30), (7, 30),
            (29, 30), (23, 30), (11, 30), (13, 30), (41, 60), (47, 60), (31, 60), (37, 60), (11, 60), (13, 60), (43, 60),
            (59, 60), (53, 60), (49, 60), (17, 60), (19, 60), (23, 60), (29, 60),
        ]
        .iter()
        .map(|&(k, n)| q(k, n))
        .collect();
        assert_eq!(singles, want);
    }

    #[test]
    fn matches_hardcoded_table() {
        let derived = derive_table().unwrap();
        let table = hardcoded_table();
        assert_eq!(derived.len(), table.len());
        for (x, m) in &table.entries {
            assert_eq!(derived.get(x), Some(m), "Gamma({x})");
        }
    }

    #[test]
    fn three_tenths() {
        let t = derive_table().unwrap();
        let want = Monomial::from_dsl("pi^1/2 phi* 2^-3/5 5^-1/2 G(1/5) G(2/5)^-1").unwrap();
        assert_eq!(t.get(&q(3, 10)), Some(&want));
    }

    #[test]
    fn underdetermined_group_is_singular() {
        let mut s = Solver::new(&GammaSymbol::basis());
        assert!(matches!(s.solve(&Group::Single(Formula::R(1, 12))), Err(Error::SingularSystem(_))));
    }
}
