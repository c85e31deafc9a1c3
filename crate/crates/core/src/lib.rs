//! Exact arithmetic for products of Schur functions: the ordinary product,
//! the Kronecker product, and the Heisenberg product that interpolates
//! between them, together with the stable behaviour of Heisenberg
//! coefficients under first-row growth and the alternating-sum recovery of
//! exact coefficients from stable ones.
//!
//! The crate is organized around small pure functions over canonical
//! [`Partition`] values, with process-wide idempotent memo tables behind the
//! scenes; everything is safe to call concurrently.

pub mod cache;
pub mod error;
pub mod heisenberg;
pub mod jacobi_trudi;
pub mod kronecker;
pub mod lr;
#[cfg(feature = "oracle")]
pub mod oracle;
pub mod partitions;
pub mod stability;

pub use error::{Error, Result};
pub use heisenberg::{
    aguiar_coefficient, graded_product, heisenberg_component, heisenberg_product, GradedExpansion,
    HeisenbergIndex,
};
pub use jacobi_trudi::{recover_aguiar, straighten, straighten_expansion, SignedSchur};
pub use kronecker::{
    character, conjugacy_classes, kronecker_coefficient, kronecker_product, reduced_kronecker,
    ConjugacyClass,
};
pub use lr::{lr_coefficient, schur_product, SchurExpansion};
pub use partitions::{partitions_of, IntSequence, Partition, SkewShape};
pub use stability::{
    coefficient_onset, family_coefficient, recovery_bound, stabilization_bound,
    stabilization_onset, stable_aguiar, stable_component, ReducedTriple,
};
