//! SplitMix64, fixed here so random streams are reproducible anywhere.
//!
//! State update: `state += 0x9E3779B97F4A7C15`. Output: the updated state
//! passed through [`mix64`]:
//!
//! ```text
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z ^ (z >> 31)
//! ```
//!
//! (all arithmetic wrapping mod 2^64). Independent streams are derived from
//! a seed and a list of integer keys by [`SplitMix64::keyed`]:
//! `state = seed; for k in keys: state = mix64(state ^ mix64(k + GAMMA))`.

pub const GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// The stream for `(seed, keys…)`; distinct key lists give unrelated streams.
    pub fn keyed(seed: u64, keys: &[u64]) -> Self {
        let state = keys
            .iter()
            .fold(seed, |s, &k| mix64(s ^ mix64(k.wrapping_add(GAMMA))));
        SplitMix64 { state }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GAMMA);
        mix64(self.state)
    }

    /// True with probability exactly `tenths / 10` up to 2^-64, using only
    /// integer comparison.
    pub fn bernoulli_tenths(&mut self, tenths: u64) -> bool {
        debug_assert!(tenths <= 10);
        let threshold = ((u128::from(tenths) << 64) / 10).min(u128::from(u64::MAX)) as u64;
        tenths == 10 || self.next_u64() < threshold
    }
}
