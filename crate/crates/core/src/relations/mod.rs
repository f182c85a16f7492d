//! Reflection and multiplication relations, the reduction table, its
//! derivation, the extension to denominator 120, and Kubert ranks.

pub mod derive;
pub mod extension;
pub mod kubert;
pub mod relation;
pub mod simplify;
pub mod table;

pub use derive::{derive_table, derive_with_steps, Step};
pub use extension::{extend_to_120, extension_table};
pub use kubert::{euler_phi, kubert_rank, naive_basis_dependent};
pub use relation::{FunctionalRelation, RelationKind};
pub use simplify::{is_gamma_free, reduce, reduce_signed, simplify_gamma_term};
pub use table::{hardcoded_table, ReductionTable};
