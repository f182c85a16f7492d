pub mod ball;
pub mod elliptic;
pub mod eval;
pub mod gamma;
pub mod precision;
pub mod pslq;
pub mod quadrature;

pub use ball::{certify_equal, BigBall, Certification};
pub use elliptic::{agm, elliptic_k, verify_elliptic_formulas, FormulaCheck};
pub use eval::eval_monomial;
pub use gamma::gamma_numeric;
pub use precision::PrecisionConfig;
pub use quadrature::{hyperelliptic_h, verify_hyperelliptic};
