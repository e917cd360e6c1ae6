//! Garside-group arithmetic and the additional length complex.
//!
//! The [`kernel`] module provides left normal forms over any finite-type
//! Garside structure. [`braid`] and [`abelian`] instantiate it; [`absorb`]
//! decides absorbability, [`complex`] builds the complex on `G/⟨Δ⟩`, and
//! [`special`] holds the braid-specific constructions (the elements `x_n`,
//! round-curve tubes, short absorbable decompositions).

pub mod abelian;
pub mod absorb;
pub mod braid;
pub mod complex;
pub mod kernel;
pub mod special;
pub mod verify;
pub mod word;

pub use kernel::{Element, Garside, GarsideOps, KernelError};

/// Group element of a braid group.
pub type Braid = Element<braid::Perm>;
