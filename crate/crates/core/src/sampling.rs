//! Seeded sampling parameters shared by every verification routine.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Window radius, sample count and seed for randomized checks.
///
/// Every check derives its random stream from `seed` and a stream id, so a
/// report is reproducible given the same `Sampling`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub window: i64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Sampling { window: 8, samples: 500, seed: 0x5eed_f1e0 }
    }
}

impl Sampling {
    pub fn new(window: i64, samples: usize, seed: u64) -> Self {
        Sampling { window, samples, seed }
    }

    /// An independent stream for the given id.
    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }
}
