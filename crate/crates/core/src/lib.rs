//! Exact combinatorics for split reductive groups over p-adic fields and their
//! mod-p torus characters.
//!
//! - [`root_datum`]: root data of GL_n, GSp_4, G2 and simply connected or adjoint
//!   products of irreducible types, with roots, coroots and pairings.
//! - [`weyl`]: Weyl groups as matrices on both lattices, reduced words, Bruhat
//!   order, parabolics and Kostant representatives.
//! - [`field`], [`character`]: smooth characters of `Q_p^x` with values in a finite
//!   field, torus characters, the Weyl action and genericity.
//! - [`closed_roots`]: closed subsets `Psi` of the positive roots and `W_Psi`.
//! - [`ord_skeleton`]: Kostant-indexed graded pieces of derived ordinary parts.
//! - [`bh_lattice`]: constituent lattices, extension graphs and subrepresentation
//!   lattices of the ordinary representations attached to `(chi, Psi)`.
//! - [`ext_rules`]: classifiers for extension rules between induced representations.
//! - [`cli`]: the `weylchar` command line.
//!
//! Simple roots are 0-based in the API and 1-based (`a1`, `s1`) in text and JSON.

pub mod bh_lattice;
pub mod character;
pub mod cli;
pub mod closed_roots;
pub mod error;
pub mod ext_rules;
pub mod field;
pub mod lattice;
pub mod ord_skeleton;
pub mod root_datum;
pub mod weyl;
