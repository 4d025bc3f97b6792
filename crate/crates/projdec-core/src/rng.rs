//! Deterministic random source used by the data generators and samplers.
//!
//! The generator is ChaCha8 keyed from a `u64` seed via
//! `SeedableRng::seed_from_u64`; both are specified to produce identical
//! streams on every platform, so generated datasets are reproducible
//! byte-for-byte from (algorithm, seed).

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Portable seeded RNG.
#[derive(Debug, Clone)]
pub struct SeededRng(ChaCha8Rng);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    pub fn uniform(&mut self) -> f64 {
        (self.0.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform index in 0..n (n > 0). Fixed-point multiply keeps the tiny
    /// modulo bias below 2^-64 per draw.
    pub fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((self.0.next_u64() as u128 * n as u128) >> 64) as usize
    }
}
