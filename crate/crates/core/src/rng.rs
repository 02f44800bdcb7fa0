//! Seeded pseudorandom source for fill-and-reduce and verification runs.
//!
//! Every run draws from `Xoshiro256**` seeded through `SplitMix64` expansion of a
//! single `u64` seed, and samples integers with `rand`'s portable uniform range
//! sampler, so a given seed reproduces the same argument vectors on every platform.

use rand::{Rng, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

pub struct SeededRng(Xoshiro256StarStar);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(Xoshiro256StarStar::seed_from_u64(seed))
    }

    /// Uniform residue in `[0, p)`.
    pub fn residue(&mut self, p: u32) -> u32 {
        self.0.random_range(0..p)
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn small_int(&mut self, bound: i64) -> i64 {
        self.0.random_range(-bound..=bound)
    }
}
