//! Equivariant Whitney numbers and Kazhdan-Lusztig coefficients.
//!
//! Representations of a permutation group are handled as class-function tables
//! (one value per group element). For uniform matroids under the full symmetric
//! group they are also available as symmetric functions through the Frobenius
//! characteristic, expanded in the `h` or Schur basis.

mod character;
mod group;
mod partition;
mod symfunc;
mod uniform;

pub use character::{equivariant_c_character, equivariant_whitney_character};
pub use group::{ClassFunctionTable, PermGroup, GROUP_CAP};
pub use partition::Partition;
pub use symfunc::{
    dimension, h_product, h_to_schur, is_schur_positive, Basis, SymFunction, SCHUR_DEGREE_BOUND,
};
pub use uniform::{equivariant_c_uniform, equivariant_whitney_uniform};
