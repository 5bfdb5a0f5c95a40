//! Exact computations around the diagonal Dilworth truncation of a pair of
//! matroids and its external activity complex.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact_algebra`]: rationals, rational matrices, univariate rational
//!   functions, multigraded Laurent polynomials.
//! - [`matroid`]: matroids on `[n]` from validated basis families.
//! - [`dilworth`]: the truncation `D(M1, M2)`.
//! - [`activity`]: weights, initial decompositions, the complex `Δ_w`.
//! - [`simplicial`]: links, duals, homology, Cohen-Macaulay test, Betti
//!   numbers and K-polynomials of simplicial complexes.
//! - [`kclasses`]: localization sums on the permutohedral variety, the
//!   g-invariant and ω.
//! - [`tropical`]: Chern-class fans and their zero-dimensional
//!   intersections.
//! - [`realizable`]: rational realizations and determinantal generators.
//! - [`io`], [`verify`] and [`cli`]: JSON formats, property suites and the
//!   command implementations behind the binary.

pub mod activity;
pub mod bits;
pub mod cli;
pub mod dilworth;
pub mod error;
pub mod exact_algebra;
pub mod io;
pub mod kclasses;
pub mod matroid;
pub mod realizable;
pub mod simplicial;
pub mod tropical;
pub mod verify;

pub use error::{Error, Result};
