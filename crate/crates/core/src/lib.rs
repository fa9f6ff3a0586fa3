//! Finite p-groups given by power-commutator presentations, with brute-force
//! computation of the commutator set `K(G)`, central series and related
//! invariants.

pub mod analysis;
pub mod catalog;
pub mod collector;
pub mod error;
pub mod fp_arith;
pub mod presentation;
pub mod verifier;

pub use analysis::{FiniteGroup, PcGroup, QuotientGroup, Subgroup};
pub use collector::{Element, NamedCommutators};
pub use error::{Error, Result};
pub use presentation::{PcPresentation, PresentationBuilder, Word};
