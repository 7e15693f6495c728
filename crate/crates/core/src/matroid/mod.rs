//! Matroids as lattices of flats.
//!
//! A [`MatroidSpec`] describes a matroid in one of several presentations;
//! [`enumerate_flats`] turns it into a [`FlatLattice`], which is all that the
//! Kazhdan-Lusztig machinery ever looks at. Loops and parallel classes are
//! absorbed by the closure operator, so the lattice is that of the simplification.

mod enumerate;
mod lattice;
mod linalg;
mod set;
mod spec;
mod whitney;

pub use enumerate::{enumerate_flats, enumerate_flats_capped, DEFAULT_FLAT_CAP};
pub use lattice::{FlatId, FlatLattice};
pub use linalg::bareiss_rank;
pub use set::ElementSet;
pub use spec::MatroidSpec;
pub use whitney::WhitneyCounter;

#[cfg(test)]
mod tests;
