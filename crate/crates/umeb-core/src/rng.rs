//! Small deterministic generator for seeded sampling.
//!
//! All randomized checks must reproduce bit-identically from a seed across
//! platforms and dependency upgrades, so we use a fixed splitmix64 stream
//! instead of an external RNG crate.

#[derive(Debug, Clone)]
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Independent substream, stable under changes to how many draws other
    /// substreams consume.
    pub(crate) fn substream(seed: u64, index: u64) -> Self {
        Self::new(seed ^ index.wrapping_mul(0x9e3779b97f4a7c15))
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub(crate) fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in [-1, 1).
    pub(crate) fn next_symmetric(&mut self) -> f64 {
        2.0 * self.next_f64() - 1.0
    }
}
