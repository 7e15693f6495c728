//! Exact computation of Kazhdan-Lusztig polynomials and Z-polynomials of matroids.
//!
//! The crate is organised bottom-up:
//!
//! * [`polyarith`]: dense big-integer and rational polynomials, truncated
//!   power series in `u` with polynomial coefficients in `t`.
//! * [`matroid`]: lattices of flats built from bases, graphs, uniform
//!   parameters, integer vectors or explicit flat lists, together with
//!   Möbius values, characteristic polynomials and multi-indexed Whitney numbers.
//! * [`klz`]: `P_M(t)` and `Z_M(t)` for an arbitrary lattice by four independent
//!   routes (defining recursion, Möbius inversion, palindromic recursion and the
//!   alternating Whitney-number sum).
//! * [`families`]: the fast path for contraction-closed families (braid, type B,
//!   uniform, all vectors over `F_q`).
//! * [`roots`]: Sturm chains, exact root isolation, interlacing and log-concavity.
//! * [`equivariant`]: permutation characters of Whitney multichains and the
//!   symmetric-function form for uniform matroids.
//! * [`corpus`]: the small-matroid corpus used by the verification suites.

pub mod corpus;
pub mod equivariant;
mod error;
pub mod families;
pub mod klz;
pub mod matroid;
pub mod polyarith;
pub mod roots;

pub use error::{Error, Result};
pub use families::{NiceFamily, WhitneyTables};
pub use klz::KlMethod;
pub use matroid::{FlatLattice, MatroidSpec};
pub use polyarith::{IntPolynomial, RatPolynomial, TruncatedSeries};
