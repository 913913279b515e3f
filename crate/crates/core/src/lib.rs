//! Exact computational kernel for graded algebras presented by generators and
//! relations, their line modules, and the bracket algebras they come from.
//!
//! Everything here is pure and allocation-only: the crate is `no_std` with
//! `alloc`. File formats, the command line, and JSON reporting live in the
//! `linemod` companion crate.
//!
//! Layout:
//!
//! * [`ncalg`]: words, noncommutative polynomials over ℚ, term orders, group degrees.
//! * [`linalg`]: exact row reduction (sparse echelon bases, small dense matrices).
//! * [`rewrite`]: presentations and degree-bounded overlap completion.
//! * [`hilbert`]: graded dimensions by normal-form counting and by a free-algebra oracle.
//! * [`filtered`]: filtered quotients of inhomogeneous enveloping algebras.
//! * [`liealg`]: bracket tables, subalgebras, admissible functionals.
//! * [`geometry`]: lines and quadrics in ℙ³.
//! * [`linemod`]: line modules, induced modules, and their certification.
//! * [`presets`]: the built-in algebras.
//! * [`bivariate`]: commutative polynomials in two parameters, for symbolic identities.

#![no_std]

extern crate alloc;

pub mod bivariate;
pub mod error;
pub mod filtered;
pub mod geometry;
pub mod hilbert;
pub mod liealg;
pub mod linalg;
pub mod linemod;
pub mod ncalg;
pub mod presets;
pub mod rewrite;

pub use error::{Error, Result};
pub use ncalg::{NcPoly, Q, Word};

/// Default degree bound for completion.
pub const DEFAULT_DEGREE_BOUND: usize = 8;

/// Default cap on the number of free-algebra monomials the oracle will span in one degree.
pub const DEFAULT_ORACLE_CAP: usize = 250_000;
