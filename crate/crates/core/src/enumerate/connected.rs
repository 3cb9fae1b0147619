//! Labeled connected graphs by edge-subset enumeration.
//!
//! Bit `k` of an edge mask is the `k`-th vertex pair in graph6 order
//! (`(0,1), (0,2), (1,2), (0,3), …`), so the enumeration walks every
//! labeled graph on `n` vertices exactly once.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by exhaustive enumeration (2^28 edge subsets).
pub const MAX_EXHAUSTIVE_ORDER: usize = 8;

/// Vertex pairs `(i, j)`, `i < j`, in graph6 (column-major) order.
pub fn pair_order(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Number of edge subsets on `n` vertices, `2^C(n,2)`.
pub fn edge_mask_count(n: usize) -> Result<u64> {
    check_order(n)?;
    Ok(1u64 << (n * n.saturating_sub(1) / 2))
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be at least 1".into()));
    }
    if n > MAX_EXHAUSTIVE_ORDER {
        return Err(Error::ExhaustiveBound {
            n,
            max: MAX_EXHAUSTIVE_ORDER,
        });
    }
    Ok(())
}

pub(crate) fn mask_rows(pairs: &[(usize, usize)], mask: u64, rows: &mut [u64]) {
    rows.iter_mut().for_each(|r| *r = 0);
    let mut bits = mask;
    while bits != 0 {
        let (i, j) = pairs[bits.trailing_zeros() as usize];
        rows[i] |= 1 << j;
        rows[j] |= 1 << i;
        bits &= bits - 1;
    }
}

pub(crate) fn rows_connected(rows: &[u64]) -> bool {
    let n = rows.len();
    if n <= 1 {
        return true;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            next |= rows[f.trailing_zeros() as usize];
            f &= f - 1;
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == all
}

/// Diameter exactly 2: not complete, and every non-adjacent pair has a
/// common neighbor.
pub(crate) fn rows_diameter2(rows: &[u64]) -> bool {
    let n = rows.len();
    if n < 3 {
        return false;
    }
    let mut missing_edge = false;
    for u in 0..n {
        for v in u + 1..n {
            if rows[u] >> v & 1 == 0 {
                if rows[u] & rows[v] == 0 {
                    return false;
                }
                missing_edge = true;
            }
        }
    }
    missing_edge
}

/// Iterator over the connected labeled graphs whose edge masks lie in a range.
#[derive(Debug, Clone)]
pub struct ConnectedGraphs {
    pairs: Vec<(usize, usize)>,
    rows: Vec<u64>,
    next: u64,
    end: u64,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            mask_rows(&self.pairs, mask, &mut self.rows);
            if rows_connected(&self.rows) {
                return Some(Graph::from_bitmasks(&self.rows));
            }
        }
        None
    }
}

/// Every connected simple graph on vertices `0..n`, labeled, each once.
/// Fails for `n = 0` and for `n > 8`.
pub fn enumerate_connected_graphs(n: usize) -> Result<ConnectedGraphs> {
    let total = edge_mask_count(n)?;
    connected_graphs_in_range(n, 0..total)
}

/// The part of [`enumerate_connected_graphs`] with edge masks in `range`;
/// disjoint ranges partition the enumeration.
pub fn connected_graphs_in_range(n: usize, range: Range<u64>) -> Result<ConnectedGraphs> {
    let total = edge_mask_count(n)?;
    Ok(ConnectedGraphs {
        pairs: pair_order(n),
        rows: vec![0; n],
        next: range.start.min(total),
        end: range.end.min(total),
    })
}
