//! Seeded rejection sampling of random connected and diameter-2 graphs.
//!
//! Sample `i` of order `n` draws from its own stream
//! `SplitMix64::keyed(seed, &[n, i])`, so any sample can be regenerated
//! alone and a sweep can be split across workers without changing output.
//! Attempt `a` of sample `i` draws G(n, p) with `p` taken from
//! [`DENSITIES_TENTHS`] at index `(i + a) mod 3`, one Bernoulli trial per
//! vertex pair in graph6 order.

use crate::error::{Error, Result};
use crate::graph::Graph;

use super::connected::{pair_order, rows_connected, rows_diameter2};
use super::rng::SplitMix64;

/// Edge probabilities 0.3, 0.5 and 0.7, in tenths.
pub const DENSITIES_TENTHS: [u64; 3] = [3, 5, 7];

/// Consecutive rejections after which sampling gives up.
pub const MAX_REJECTIONS: u64 = 1_000_000;

/// Largest order the bitmask sampler supports.
pub const MAX_SAMPLE_ORDER: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SampleTarget {
    Connected,
    Diameter2,
}

impl SampleTarget {
    fn min_order(self) -> usize {
        match self {
            SampleTarget::Connected => 1,
            SampleTarget::Diameter2 => 3,
        }
    }

    fn accepts(self, rows: &[u64]) -> bool {
        match self {
            SampleTarget::Connected => rows_connected(rows),
            SampleTarget::Diameter2 => rows_diameter2(rows),
        }
    }
}

/// Random graphs of one order and target class under one seed.
#[derive(Debug, Clone)]
pub struct RandomGraphs {
    target: SampleTarget,
    n: usize,
    seed: u64,
    pairs: Vec<(usize, usize)>,
}

impl RandomGraphs {
    pub fn new(target: SampleTarget, n: usize, seed: u64) -> Result<Self> {
        if n < target.min_order() || n > MAX_SAMPLE_ORDER {
            return Err(Error::InvalidParameter(format!(
                "sample order {n} outside {}..={MAX_SAMPLE_ORDER}",
                target.min_order()
            )));
        }
        Ok(RandomGraphs {
            target,
            n,
            seed,
            pairs: pair_order(n),
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The `index`-th sample; depends only on `(seed, n, index)`.
    pub fn sample(&self, index: u64) -> Result<Graph> {
        let mut rng = SplitMix64::keyed(self.seed, &[self.n as u64, index]);
        let mut rows = vec![0u64; self.n];
        for attempt in 0..MAX_REJECTIONS {
            let tenths = DENSITIES_TENTHS[((index % 3 + attempt % 3) % 3) as usize];
            rows.iter_mut().for_each(|r| *r = 0);
            for &(i, j) in &self.pairs {
                if rng.bernoulli_tenths(tenths) {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
            }
            if self.target.accepts(&rows) {
                return Ok(Graph::from_bitmasks(&rows));
            }
        }
        Err(Error::SamplingStalled {
            n: self.n,
            rejections: MAX_REJECTIONS,
        })
    }

    /// Samples `start..end` in index order.
    pub fn samples(&self, start: u64, end: u64) -> impl Iterator<Item = Result<Graph>> + '_ {
        (start..end).map(move |i| self.sample(i))
    }
}

/// `count` graphs of order `n ≥ 3` with diameter exactly 2.
pub fn sample_diameter2_graphs(
    n: usize,
    count: u64,
    seed: u64,
) -> Result<impl Iterator<Item = Result<Graph>>> {
    if count == 0 {
        return Err(Error::InvalidParameter("sample count must be at least 1".into()));
    }
    let sampler = RandomGraphs::new(SampleTarget::Diameter2, n, seed)?;
    Ok((0..count).map(move |i| sampler.sample(i)))
}
