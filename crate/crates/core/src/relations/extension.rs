//! Gamma values at denominators 40 and 120 over the sixteen symbols. Sines at
//! these points have no exact form here, so the surd parts are numeric tails.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use super::derive::{Formula, Group, Solver, Step};
use super::table::hardcoded_table;
use crate::atoms::GammaSymbol;
use crate::error::Result;
use crate::monomial::Monomial;
use crate::rational::Rational;
use crate::trig::circle::supported_denominator;

/// Equations that determine `21/40, 23/40, 27/40, 19/40, 11/40, 31/40`.
pub fn forty_sequence() -> Vec<Formula> {
    use Formula::*;
    vec![M(2, 1, 40), M(2, 3, 40), M(2, 7, 40), R(19, 40), M(5, 3, 40), M(2, 11, 40)]
}

/// Equations that determine the fourteen listed points with denominator 120.
pub fn one_twenty_sequence() -> Vec<Formula> {
    use Formula::*;
    vec![
        M(3, 1, 120),
        M(3, 7, 120),
        M(3, 11, 120),
        M(2, 1, 120),
        M(2, 7, 120),
        M(2, 11, 120),
        M(2, 31, 120),
        M(2, 41, 120),
        M(2, 47, 120),
        R(59, 120),
        M(5, 11, 120),
        M(3, 1, 40),
        M(2, 23, 120),
        M(2, 43, 120),
    ]
}

/// The extension values and the log of solved steps.
pub struct Extension {
    pub entries: BTreeMap<Rational, Monomial>,
    pub steps: Vec<Step>,
}

/// Runs both sequences, each followed by a reflection sweep, starting from
/// the hardcoded table and the extension symbols.
pub fn extend_with_steps() -> Result<Extension> {
    let mut s = Solver::new(&GammaSymbol::extension());
    s.known.extend(hardcoded_table().entries.iter().map(|(x, m)| (x.clone(), m.clone())));
    for e in forty_sequence() {
        s.solve(&Group::Single(e))?;
    }
    s.reflection_sweep(40)?;
    for e in one_twenty_sequence() {
        s.solve(&Group::Single(e))?;
    }
    s.reflection_sweep(120)?;
    let entries = s.known.into_iter().filter(|(x, _)| !supported_denominator(x.denom())).collect();
    Ok(Extension { entries, steps: s.steps })
}

/// Every `Gamma(k/n)` in `(0, 1)` with `n` in lowest terms dividing 120 but
/// not 24 or 60.
pub fn extend_to_120() -> Result<BTreeMap<Rational, Monomial>> {
    extend_with_steps().map(|e| e.entries)
}

static EXTENSION: LazyLock<Result<BTreeMap<Rational, Monomial>>> = LazyLock::new(extend_to_120);

/// Cached [`extend_to_120`].
pub fn extension_table() -> Result<&'static BTreeMap<Rational, Monomial>> {
    EXTENSION.as_ref().map_err(Clone::clone)
}
