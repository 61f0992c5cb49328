//! Counting Hopf–Galois structures between groups `M(k,l) = D_2k × C_l` of
//! order `2N`, `N` odd.
//!
//! Two independent routes are provided:
//!
//! * [`formula`]: closed-form counts `e(Γ, G)` and `e′(Γ, G)` with their
//!   hypotheses enforced;
//! * [`oracle`]: exhaustive enumeration of regular subgroups and regular
//!   embeddings inside explicit holomorphs, plus skew-brace class counts.
//!
//! [`numtheory`], [`group`] and [`holomorph`] supply the arithmetic and the
//! concrete groups both routes share.

pub mod error;
pub mod formula;
pub mod group;
pub mod holomorph;
pub mod numtheory;
pub mod oracle;

pub use error::{Error, PreconditionViolation, Result};
pub use group::{classify_order_2n_group, AutElement, GroupElement, MklParams, SizeGuard, TypeTag};
pub use holomorph::{HolElement, HolTable, PaperTriple};
