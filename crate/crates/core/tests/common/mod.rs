//! Independent reference implementations used as test oracles. Nothing
//! here calls into the library's distance, invariant or graph6 code.

#![allow(dead_code)]

use ecc_core::Graph;

pub const INF: u64 = u64::MAX / 4;

/// Floyd–Warshall on the adjacency relation.
pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u64>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                row[v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    d
}

/// W, E1, E2, ε and ξ^c from a distance matrix.
#[derive(Debug, PartialEq, Eq)]
pub struct Naive {
    pub wiener: u64,
    pub e1: u64,
    pub e2: u64,
    pub total_ecc: u64,
    pub xi: u64,
    pub diam: u64,
}

pub fn naive(g: &Graph) -> Naive {
    let d = floyd_warshall(g);
    let n = g.order();
    let ecc: Vec<u64> = d.iter().map(|r| *r.iter().max().unwrap()).collect();
    let mut wiener = 0;
    let mut e2 = 0;
    for u in 0..n {
        for v in u + 1..n {
            wiener += d[u][v];
            if g.has_edge(u, v) {
                e2 += ecc[u] * ecc[v];
            }
        }
    }
    Naive {
        wiener,
        e1: ecc.iter().map(|e| e * e).sum(),
        e2,
        total_ecc: ecc.iter().sum(),
        xi: (0..n).map(|v| g.degree(v) as u64 * ecc[v]).sum(),
        diam: ecc.iter().copied().max().unwrap_or(0),
    }
}

/// Decodes graph6 for n ≤ 258047 straight from the format description:
/// N(n) then the upper triangle column by column, 6 bits per byte.
pub fn decode_graph6(s: &str) -> (usize, Vec<(usize, usize)>) {
    let b: Vec<u32> = s.bytes().map(|c| u32::from(c) - 63).collect();
    let (n, body) = if b[0] < 63 {
        (b[0] as usize, &b[1..])
    } else {
        (((b[1] << 12) | (b[2] << 6) | b[3]) as usize, &b[4..])
    };
    let bits = body.iter().flat_map(|x| (0..6).rev().map(move |i| (x >> i) & 1 == 1));
    let pairs = (1..n).flat_map(|v| (0..v).map(move |u| (u, v)));
    let edges = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
    (n, edges)
}

/// Vertices 0..n with edges chosen by `bits`, indexed over all pairs u < v
/// in row order.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = pairs.zip(bits).filter(|(_, &b)| b).map(|(p, _)| p).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Isomorphism-invariant encoding of a tree: the smallest AHU string over
/// its centers.
pub fn ahu(t: &Graph) -> String {
    fn enc(t: &Graph, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> =
            t.neighbors(v).iter().filter(|&&w| w != parent).map(|&w| enc(t, w, v)).collect();
        kids.sort();
        format!("({})", kids.concat())
    }
    let d = floyd_warshall(t);
    let ecc: Vec<u64> = d.iter().map(|r| *r.iter().max().unwrap()).collect();
    let rad = *ecc.iter().min().unwrap();
    (0..t.order()).filter(|&v| ecc[v] == rad).map(|c| enc(t, c, usize::MAX)).min().unwrap()
}
