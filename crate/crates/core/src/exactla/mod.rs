//! Exact linear algebra: incremental row reduction over `F_p`, Hermite normal form with
//! transform, LLL reduction, and fraction-free rational elimination.

mod echelon;
mod fp;
mod int;
mod lll;
mod prime;
mod rational;

pub use echelon::{Echelon, BATCH};
pub use fp::Fp;
pub use int::{hnf_with_transform, row_hnf, same_lattice, IntMatrix};
pub use lll::{lll_reduce, square_norm, Delta};
pub use prime::PrimeMatrix;
pub use rational::RationalEchelon;
