//! Simple undirected graphs on dense vertex indices `0..n`.

use std::fmt;

use crate::error::{Error, Result};

/// An immutable simple undirected graph stored as sorted adjacency lists.
///
/// Vertices are `0..n`. Neighbor lists never contain the vertex itself or
/// duplicates, and `u` appears in `v`'s list exactly when `v` appears in
/// `u`'s.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Sorts and deduplicates raw adjacency lists. Callers guarantee
    /// symmetry and the absence of loops.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<usize>>) -> Self {
        let mut twice_m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice_m += list.len();
        }
        debug_assert!(twice_m % 2 == 0);
        Graph { adj, m: twice_m / 2 }
    }

    /// Builds a graph on `n ≤ 64` vertices from per-vertex neighbor bitmasks.
    pub(crate) fn from_bitmasks(rows: &[u64]) -> Self {
        let mut m2 = 0;
        let adj: Vec<Vec<usize>> = rows
            .iter()
            .map(|&row| {
                let mut list = Vec::with_capacity(row.count_ones() as usize);
                let mut bits = row;
                while bits != 0 {
                    list.push(bits.trailing_zeros() as usize);
                    bits &= bits - 1;
                }
                m2 += list.len();
                list
            })
            .collect();
        Graph { adj, m: m2 / 2 }
    }

    /// n(G)
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// m(G)
    pub fn size(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Every edge once, as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let start = list.partition_point(|&w| w < u);
            list[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// BFS from vertex 0 reaches everything. The graphs on 0 and 1 vertices
    /// count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == n
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.m + 1 == self.order() && self.is_connected()
    }

    /// Connected and 2-regular, i.e. isomorphic to `C_n`.
    pub fn is_cycle(&self) -> bool {
        self.order() >= 3
            && self.m == self.order()
            && self.adj.iter().all(|l| l.len() == 2)
            && self.is_connected()
    }

    /// Edge `uv` is present in the result iff `u ≠ v` and `uv` is absent here.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let adj = (0..n)
            .map(|u| {
                let mut present = self.adj[u].iter().peekable();
                let mut out = Vec::with_capacity(n - 1 - self.adj[u].len());
                for v in 0..n {
                    if present.peek() == Some(&&v) {
                        present.next();
                    } else if v != u {
                        out.push(v);
                    }
                }
                out
            })
            .collect();
        Graph {
            adj,
            m: n * n.saturating_sub(1) / 2 - self.m,
        }
    }

    /// Subgraph induced by `keep`, relabelled `0..|keep|` in ascending order
    /// of the original indices. Duplicates in `keep` are ignored.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut kept: Vec<usize> = keep.to_vec();
        kept.sort_unstable();
        kept.dedup();
        if let Some(&bad) = kept.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let mut relabel = vec![usize::MAX; n];
        for (new, &old) in kept.iter().enumerate() {
            relabel[old] = new;
        }
        let adj = kept
            .iter()
            .map(|&old| {
                self.adj[old]
                    .iter()
                    .filter_map(|&w| (relabel[w] != usize::MAX).then_some(relabel[w]))
                    .collect()
            })
            .collect();
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Parses the edge-list text format: `#` comment lines, then a header
    /// line `n m`, then `m` lines `u v` with 0-based endpoints.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (hline, header) = lines.next().ok_or(Error::EdgeList {
            line: 0,
            msg: "missing `n m` header".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines.by_ref() {
            if edges.len() == m {
                return Err(Error::EdgeList {
                    line,
                    msg: format!("more than the declared {m} edges"),
                });
            }
            edges.push(parse_pair(line, body)?);
        }
        if edges.len() != m {
            return Err(Error::EdgeList {
                line: hline,
                msg: format!("declared {m} edges, found {}", edges.len()),
            });
        }
        Graph::from_edge_list(n, &edges)
    }

    /// Renders the edge-list text format accepted by [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let bad = |msg: &str| Error::EdgeList {
        line,
        msg: format!("{msg}: {body:?}"),
    };
    let mut it = body.split_whitespace();
    let a = it.next().ok_or_else(|| bad("expected two integers"))?;
    let b = it.next().ok_or_else(|| bad("expected two integers"))?;
    if it.next().is_some() {
        return Err(bad("trailing tokens"));
    }
    let a = a.parse().map_err(|_| bad("not a non-negative integer"))?;
    let b = b.parse().map_err(|_| bad("not a non-negative integer"))?;
    Ok((a, b))
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
