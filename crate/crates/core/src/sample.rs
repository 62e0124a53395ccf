//! Deterministic pseudo-random elements for witness searches and sampling checks.
//!
//! Coefficients are drawn uniformly from `{−2, …, 2}` by a ChaCha8 stream seeded
//! with a caller-supplied `u64`, so runs are reproducible across platforms.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matrix::Vector;
use crate::ring::ScalarRing;

pub const COEFFICIENT_POOL: core::ops::RangeInclusive<i64> = -2..=2;

pub struct ElementSampler {
    ring: ScalarRing,
    rng: ChaCha8Rng,
}

impl ElementSampler {
    pub fn new(ring: ScalarRing, seed: u64) -> Self {
        ElementSampler {
            ring,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A coordinate vector of length `len` with coefficients from the pool.
    pub fn element(&mut self, len: usize) -> Vector {
        (0..len)
            .map(|_| self.ring.from_i64(self.rng.gen_range(COEFFICIENT_POOL)))
            .collect()
    }

    /// A nonzero element (retries until one coordinate is nonzero; `len > 0`).
    pub fn nonzero_element(&mut self, len: usize) -> Vector {
        loop {
            let v = self.element(len);
            if v.iter().any(|s| !s.is_zero()) {
                return v;
            }
        }
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.gen_range(0..bound)
    }

    pub fn elements(&mut self, len: usize, count: usize) -> Vec<Vector> {
        (0..count).map(|_| self.element(len)).collect()
    }
}
