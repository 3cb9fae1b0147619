//! All-pairs hop distances and the per-vertex quantities derived from them.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Distance matrix of a connected graph together with eccentricities,
/// transmissions, diameter and radius.
///
/// The matrix is a flat row-major `n × n` array; every distance is below `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceData {
    n: usize,
    dist: Vec<u32>,
    ecc: Vec<u32>,
    tr: Vec<u64>,
    diam: u32,
    rad: u32,
}

impl DistanceData {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    /// Row `u` of the distance matrix.
    pub fn row(&self, u: usize) -> &[u32] {
        &self.dist[u * self.n..(u + 1) * self.n]
    }

    /// ε(v)
    pub fn ecc(&self, v: usize) -> u32 {
        self.ecc[v]
    }

    pub fn eccentricities(&self) -> &[u32] {
        &self.ecc
    }

    /// Tr(v), the sum of distances from `v`.
    pub fn transmission(&self, v: usize) -> u64 {
        self.tr[v]
    }

    pub fn transmissions(&self) -> &[u64] {
        &self.tr
    }

    pub fn diameter(&self) -> u32 {
        self.diam
    }

    pub fn radius(&self) -> u32 {
        self.rad
    }

    pub fn is_self_centered(&self) -> bool {
        self.diam == self.rad
    }
}

/// BFS from every vertex.
///
/// Fails with [`Error::Disconnected`] when some pair is unreachable and
/// with [`Error::EmptyGraph`] on zero vertices. `K1` gets ε = Tr = 0 and
/// diam = rad = 0.
pub fn all_pairs_distances(g: &Graph) -> Result<DistanceData> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut dist = vec![u32::MAX; n * n];
    let mut ecc = vec![0u32; n];
    let mut tr = vec![0u64; n];
    let mut queue = Vec::with_capacity(n);

    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        let mut sum = 0u64;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            let du = row[u];
            for &w in g.neighbors(u) {
                if row[w] == u32::MAX {
                    row[w] = du + 1;
                    sum += u64::from(du + 1);
                    queue.push(w);
                }
            }
        }
        if queue.len() != n {
            return Err(Error::Disconnected);
        }
        ecc[s] = row[queue[n - 1]];
        tr[s] = sum;
    }

    let diam = *ecc.iter().max().expect("n >= 1");
    let rad = *ecc.iter().min().expect("n >= 1");
    Ok(DistanceData {
        n,
        dist,
        ecc,
        tr,
        diam,
        rad,
    })
}
