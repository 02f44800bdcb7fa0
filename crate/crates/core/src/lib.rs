//! Polynomial identities for the 7-dimensional simple Malcev algebra, viewed as a
//! Lie-Yamaguti algebra through the sl(2)-module structure of `V(6)`.
//!
//! * [`sl2rep`] builds the module basis of the exterior square of `V(6)`, the
//!   equivariant projections onto `V(6)` and `V(2)`, and the resulting bilinear and
//!   trilinear structure constants.
//! * [`freealg`] enumerates association types and normal-form multilinear monomials
//!   for one anticommutative binary product and one ternary product skew in its first
//!   two arguments, with the symmetric-group action and liftings.
//! * [`exactla`] holds the exact linear algebra: incremental row canonical form over
//!   `F_p`, Hermite normal form with transform, integral LLL and rational elimination.
//! * [`engine`] runs fill-and-reduce, module generators, consequence spaces and
//!   identity verification, and ships the named identity corpus.
// index loops follow the matrix formulas they implement
#![allow(clippy::needless_range_loop)]

pub mod engine;
pub mod error;
pub mod exactla;
pub mod freealg;
pub mod rng;
pub mod sl2rep;

pub use error::{Error, Result};
