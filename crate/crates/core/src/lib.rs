pub mod atoms;
pub mod error;
pub mod hypergeometric;
pub mod linalg;
pub mod monomial;
pub mod numeric;
pub mod rational;
pub mod relations;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};
pub use rational::{q, Rational};
pub use monomial::{canonicalize, Factor, Format, Monomial};
