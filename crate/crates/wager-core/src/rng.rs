//! Deterministic, splittable random streams.
//!
//! Replication `r` of an experiment draws from `Stream::derive(seed, r)`.
//! Streams are ChaCha8 instances on distinct counter streams, so deriving
//! one is O(1), any two streams are independent by construction, and the
//! sequence for a given `(master_seed, stream_id)` pair is identical
//! across runs, platforms, and thread counts.

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Identifies one derived stream.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StreamKey {
    pub master_seed: u64,
    /// Replication index or named purpose.
    pub stream_id: u64,
}

impl StreamKey {
    pub fn stream(&self) -> Stream {
        Stream::derive(self.master_seed, self.stream_id)
    }
}

/// One independently seeded random stream.
#[derive(Debug, Clone)]
pub struct Stream {
    rng: ChaCha8Rng,
}

const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

// splitmix64 finalizer; expands the master seed into key material without
// relying on any library's seed-expansion choices staying put.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Stream {
    /// Derive the stream for `(master_seed, stream_id)`.
    pub fn derive(master_seed: u64, stream_id: u64) -> Self {
        let mut seed = [0u8; 32];
        let mut state = master_seed;
        for chunk in seed.chunks_exact_mut(8) {
            state = state.wrapping_add(GOLDEN_GAMMA);
            chunk.copy_from_slice(&mix64(state).to_le_bytes());
        }
        let mut rng = ChaCha8Rng::from_seed(seed);
        rng.set_stream(stream_id);
        Self { rng }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    /// Uniform draw from `[0, n)` without modulo bias, by widening
    /// multiply with rejection.
    pub fn next_below(&mut self, n: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        // Reject the low product when it falls in the biased region
        // [0, 2^64 mod n).
        let threshold = n.wrapping_neg() % n;
        loop {
            let wide = (self.next_u64() as u128) * (n as u128);
            if wide as u64 >= threshold {
                return Ok((wide >> 64) as u64);
            }
        }
    }
}
