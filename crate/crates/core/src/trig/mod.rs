//! Exact trigonometric values in a quadratic tower.

pub mod circle;
pub mod lemmas;
pub mod product;
pub mod sines;
pub mod tower;

pub use circle::{exp_i_pi, UnitCirclePoint};
pub use product::{IdentityCheck, PowerProduct};
pub use tower::TowerElement;
pub use sines::sin_pi_exact;
pub use lemmas::{verify_lemma_tables, LemmaReport};
