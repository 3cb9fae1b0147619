//! Distance-based invariants: Wiener index, Zagreb eccentricity indices and
//! the supporting quantities used when comparing them.
//!
//! Everything is an exact integer except `avd` and `avt`, which are reduced
//! [`Rational`]s.

use serde::{Serialize, Serializer};

use crate::distance::{all_pairs_distances, DistanceData};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// W(G) = ½ Σ_v Tr(v).
pub fn wiener(d: &DistanceData) -> u64 {
    let twice: u64 = d.transmissions().iter().sum();
    debug_assert!(twice.is_multiple_of(2), "transmission sum must be even");
    twice / 2
}

/// Wiener index of a tree from edge cuts: Σ over edges `uv` of `n_u · n_v`,
/// where `n_u`, `n_v` are the component orders after deleting `uv`.
pub fn wiener_tree_edgecut(t: &Graph) -> Result<u64> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.order();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![0];
    parent[0] = 0;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &w in t.neighbors(u) {
            if parent[w] == usize::MAX {
                parent[w] = u;
                stack.push(w);
            }
        }
    }
    let mut subtree = vec![1u64; n];
    let mut total = 0;
    for &u in order.iter().skip(1).rev() {
        total += subtree[u] * (n as u64 - subtree[u]);
        subtree[parent[u]] += subtree[u];
    }
    Ok(total)
}

/// E1(G) = Σ_v ε(v)².
pub fn zagreb_ecc_1(d: &DistanceData) -> u64 {
    d.eccentricities().iter().map(|&e| u64::from(e) * u64::from(e)).sum()
}

/// E2(G) = Σ_{uv ∈ E} ε(u)·ε(v), each edge counted once.
pub fn zagreb_ecc_2(g: &Graph, d: &DistanceData) -> u64 {
    g.edges()
        .map(|(u, v)| u64::from(d.ecc(u)) * u64::from(d.ecc(v)))
        .sum()
}

/// ε(G) = Σ_v ε(v).
pub fn total_eccentricity(d: &DistanceData) -> u64 {
    d.eccentricities().iter().map(|&e| u64::from(e)).sum()
}

/// ξ^c(G) = Σ_v deg(v)·ε(v).
pub fn eccentric_connectivity(g: &Graph, d: &DistanceData) -> u64 {
    (0..g.order())
        .map(|v| g.degree(v) as u64 * u64::from(d.ecc(v)))
        .sum()
}

/// Vertices of degree `n - 1`.
pub fn universal_vertices(g: &Graph) -> Vec<usize> {
    let n = g.order();
    (0..n).filter(|&v| g.degree(v) + 1 == n).collect()
}

/// The complement of [`universal_vertices`], ascending.
pub fn non_universal_vertices(g: &Graph) -> Vec<usize> {
    let n = g.order();
    (0..n).filter(|&v| g.degree(v) + 1 != n).collect()
}

/// avd(G) = 2m/n, zero for the null graph.
pub fn average_degree(g: &Graph) -> Rational {
    if g.order() == 0 {
        return Rational::ZERO;
    }
    Rational::new(2 * g.size() as i64, g.order() as i64)
}

/// avt(G) = 2W/n.
pub fn average_transmission(d: &DistanceData) -> Rational {
    Rational::new(2 * wiener(d) as i64, d.order() as i64)
}

/// Every scalar invariant of one connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub m: usize,
    pub diam: u32,
    pub rad: u32,
    pub wiener: u64,
    pub e1: u64,
    pub e2: u64,
    pub total_ecc: u64,
    pub ecc_connectivity: u64,
    pub n_universal: usize,
    pub avd: Rational,
    pub avt: Rational,
    pub self_centered: bool,
}

impl InvariantReport {
    /// Builds the report from precomputed distances of `g`.
    pub fn from_distances(g: &Graph, d: &DistanceData) -> Self {
        let wiener = wiener(d);
        let report = InvariantReport {
            n: g.order(),
            m: g.size(),
            diam: d.diameter(),
            rad: d.radius(),
            wiener,
            e1: zagreb_ecc_1(d),
            e2: zagreb_ecc_2(g, d),
            total_ecc: total_eccentricity(d),
            ecc_connectivity: eccentric_connectivity(g, d),
            n_universal: universal_vertices(g).len(),
            avd: average_degree(g),
            avt: average_transmission(d),
            self_centered: d.is_self_centered(),
        };
        debug_assert!(report.e1 >= report.total_ecc);
        report
    }

    /// CSV header matching the field order of [`InvariantReport`]'s serialized form.
    pub const CSV_HEADER: [&'static str; 15] = [
        "n",
        "m",
        "diam",
        "rad",
        "W",
        "E1",
        "E2",
        "totecc",
        "xic",
        "nprime",
        "avd_num",
        "avd_den",
        "avt_num",
        "avt_den",
        "self_centered",
    ];
}

/// Computes distances and every invariant. Fails on disconnected or empty input.
pub fn full_report(g: &Graph) -> Result<InvariantReport> {
    let d = all_pairs_distances(g)?;
    Ok(InvariantReport::from_distances(g, &d))
}

#[derive(Serialize)]
struct ReportRow {
    n: usize,
    m: usize,
    diam: u32,
    rad: u32,
    #[serde(rename = "W")]
    wiener: u64,
    #[serde(rename = "E1")]
    e1: u64,
    #[serde(rename = "E2")]
    e2: u64,
    totecc: u64,
    xic: u64,
    nprime: usize,
    avd_num: i64,
    avd_den: i64,
    avt_num: i64,
    avt_den: i64,
    self_centered: bool,
}

impl Serialize for InvariantReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ReportRow {
            n: self.n,
            m: self.m,
            diam: self.diam,
            rad: self.rad,
            wiener: self.wiener,
            e1: self.e1,
            e2: self.e2,
            totecc: self.total_ecc,
            xic: self.ecc_connectivity,
            nprime: self.n_universal,
            avd_num: self.avd.numer(),
            avd_den: self.avd.denom(),
            avt_num: self.avt.numer(),
            avt_den: self.avt.denom(),
            self_centered: self.self_centered,
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        g(n, &e)
    }

    fn star(leaves: usize) -> Graph {
        g(leaves + 1, &(1..=leaves).map(|v| (0, v)).collect::<Vec<_>>())
    }

    fn path(n: usize) -> Graph {
        g(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
    }

    fn cycle(n: usize) -> Graph {
        g(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn wiener_values() {
        let d = |x: &Graph| all_pairs_distances(x).unwrap();
        assert_eq!(wiener(&d(&complete(5))), 10);
        assert_eq!(wiener(&d(&star(4))), 16);
        assert_eq!(wiener(&d(&path(4))), 10);
    }

    #[test]
    fn edgecut_wiener_on_small_trees() {
        assert_eq!(wiener_tree_edgecut(&path(3)), Ok(4));
        assert_eq!(wiener_tree_edgecut(&path(4)), Ok(10));
        assert_eq!(wiener_tree_edgecut(&star(4)), Ok(16));
        assert_eq!(wiener_tree_edgecut(&Graph::empty(1)), Ok(0));
        assert_eq!(wiener_tree_edgecut(&cycle(4)), Err(Error::NotATree));
        assert_eq!(wiener_tree_edgecut(&Graph::empty(2)), Err(Error::NotATree));
    }

    #[test]
    fn zagreb_values() {
        let d5 = all_pairs_distances(&complete(5)).unwrap();
        assert_eq!(zagreb_ecc_1(&d5), 5);
        let c6 = cycle(6);
        let d6 = all_pairs_distances(&c6).unwrap();
        assert_eq!(zagreb_ecc_1(&d6), 54);
        assert_eq!(zagreb_ecc_2(&c6, &d6), 54);

        let s = star(4);
        let ds = all_pairs_distances(&s).unwrap();
        // diameter two, one universal vertex: E1 = 4n - 3n'
        assert_eq!(zagreb_ecc_1(&ds), 17);
        assert_eq!(zagreb_ecc_2(&s, &ds), 8);

        let c5 = cycle(5);
        let d = all_pairs_distances(&c5).unwrap();
        assert_eq!(zagreb_ecc_2(&c5, &d), 20);
    }

    #[test]
    fn eccentricity_sums() {
        let d = all_pairs_distances(&cycle(6)).unwrap();
        assert_eq!(total_eccentricity(&d), 18);
        assert_eq!(total_eccentricity(&all_pairs_distances(&path(4)).unwrap()), 10);
        assert_eq!(total_eccentricity(&all_pairs_distances(&Graph::empty(1)).unwrap()), 0);

        let c4 = cycle(4);
        assert_eq!(eccentric_connectivity(&c4, &all_pairs_distances(&c4).unwrap()), 16);
        let p3 = path(3);
        assert_eq!(eccentric_connectivity(&p3, &all_pairs_distances(&p3).unwrap()), 6);
    }

    #[test]
    fn universal_vertex_sets() {
        assert_eq!(universal_vertices(&star(4)), vec![0]);
        assert!(universal_vertices(&cycle(4)).is_empty());
        assert_eq!(universal_vertices(&complete(5)), vec![0, 1, 2, 3, 4]);
        assert_eq!(non_universal_vertices(&star(4)), vec![1, 2, 3, 4]);
    }

    #[test]
    fn reports() {
        let r = full_report(&cycle(5)).unwrap();
        assert_eq!((r.n, r.m, r.diam, r.rad), (5, 5, 2, 2));
        assert_eq!((r.wiener, r.e1, r.e2), (15, 20, 20));
        assert!(r.self_centered);

        let r = full_report(&star(4)).unwrap();
        assert_eq!((r.wiener, r.e1, r.e2), (16, 17, 8));
        assert_eq!(r.avd, Rational::new(8, 5));
        assert_eq!(r.avt, Rational::new(32, 5));
        assert!(!r.self_centered);

        let r = full_report(&path(2)).unwrap();
        assert_eq!((r.wiener, r.e1, r.e2), (1, 2, 1));

        assert_eq!(full_report(&Graph::empty(3)), Err(Error::Disconnected));
    }
}
