//! Eccentric sets and recognition of universally diametrical (UD) graphs.
//!
//! A pair `(u, v)` with `d(u, v) = diam(G)` is a UD pair when every other
//! vertex has `u` or `v` among its eccentric vertices. A graph is UD when it
//! has such a pair.

use serde::Serialize;

use crate::distance::{all_pairs_distances, DistanceData};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::total_eccentricity;

/// Ecc(v): the vertices at distance ε(v) from `v`. Equals `[v]` for `K1`.
pub fn eccentric_set(d: &DistanceData, v: usize) -> Vec<usize> {
    let e = d.ecc(v);
    (0..d.order()).filter(|&u| d.dist(v, u) == e).collect()
}

/// All pairs `u < v` at distance `diam`, in lexicographic order.
pub fn diametrical_pairs(d: &DistanceData) -> Vec<(usize, usize)> {
    let n = d.order();
    let diam = d.diameter();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if d.dist(u, v) == diam {
                out.push((u, v));
            }
        }
    }
    out
}

/// First vertex `w ∉ {u, v}` whose eccentric set misses both `u` and `v`.
pub fn ud_witness(d: &DistanceData, u: usize, v: usize) -> Result<Option<usize>> {
    let n = d.order();
    for x in [u, v] {
        if x >= n {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    if d.dist(u, v) != d.diameter() {
        return Err(Error::NotDiametrical { u, v });
    }
    Ok((0..n).find(|&w| {
        w != u && w != v && d.dist(w, u).max(d.dist(w, v)) != d.ecc(w)
    }))
}

/// Whether `(u, v)` is a UD pair. Errors if the pair is not diametrical.
pub fn is_ud_pair(d: &DistanceData, u: usize, v: usize) -> Result<bool> {
    Ok(ud_witness(d, u, v)?.is_none())
}

/// A diametrical pair that failed the UD test, with the offending vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UdFailure {
    pub pair: (usize, usize),
    pub witness: usize,
}

/// Outcome of scanning all diametrical pairs in lexicographic order.
///
/// `pair` is the first UD pair found; `failures` lists every pair rejected
/// before it (all diametrical pairs when the graph is not UD).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UdCertificate {
    pub is_ud: bool,
    pub pair: Option<(usize, usize)>,
    pub diam: u32,
    pub failures: Vec<UdFailure>,
}

pub fn find_ud_certificate(g: &Graph) -> Result<UdCertificate> {
    let d = all_pairs_distances(g)?;
    Ok(ud_certificate(&d))
}

/// [`find_ud_certificate`] on precomputed distances.
///
/// `K1` is UD with the degenerate pair `(0, 0)`; `K2` is UD with `(0, 1)`
/// since there is no third vertex to test.
pub fn ud_certificate(d: &DistanceData) -> UdCertificate {
    let diam = d.diameter();
    if d.order() == 1 {
        return UdCertificate {
            is_ud: true,
            pair: Some((0, 0)),
            diam,
            failures: Vec::new(),
        };
    }
    let mut failures = Vec::new();
    for (u, v) in diametrical_pairs(d) {
        match ud_witness(d, u, v).expect("pair is diametrical") {
            None => {
                return UdCertificate {
                    is_ud: true,
                    pair: Some((u, v)),
                    diam,
                    failures,
                }
            }
            Some(witness) => failures.push(UdFailure {
                pair: (u, v),
                witness,
            }),
        }
    }
    UdCertificate {
        is_ud: false,
        pair: None,
        diam,
        failures,
    }
}

/// ε(G) − ε(v) − Tr(v), which is never negative.
pub fn lemma41_gap(d: &DistanceData, v: usize) -> i64 {
    total_eccentricity(d) as i64 - i64::from(d.ecc(v)) - d.transmission(v) as i64
}

/// Whether ε(u) = d(v, u) for every `u ≠ v`, the condition for a zero gap.
pub fn gap_equality_condition(d: &DistanceData, v: usize) -> bool {
    (0..d.order()).all(|u| u == v || d.ecc(u) == d.dist(v, u))
}
