//! Per-graph verdicts and their aggregation into per-theorem reports.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::graph::Graph;
use crate::graph6::emit_graph6;

/// Outcome of one theorem on one input.
///
/// `conclusion_held` is `Some` exactly when `hypothesis_met`; a
/// counterexample is a met hypothesis with a failed conclusion. `equality`
/// marks inputs where a non-strict bound is attained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: &'static str,
    pub hypothesis_met: bool,
    pub conclusion_held: Option<bool>,
    pub graph_id: String,
    pub equality: bool,
    pub detail: String,
}

impl TheoremVerdict {
    pub fn vacuous(theorem_id: &'static str, g: &Graph, detail: String) -> Self {
        TheoremVerdict {
            theorem_id,
            hypothesis_met: false,
            conclusion_held: None,
            graph_id: emit_graph6(g),
            equality: false,
            detail,
        }
    }

    pub fn decided(
        theorem_id: &'static str,
        g: &Graph,
        held: bool,
        equality: bool,
        detail: String,
    ) -> Self {
        TheoremVerdict {
            theorem_id,
            hypothesis_met: true,
            conclusion_held: Some(held),
            graph_id: emit_graph6(g),
            equality,
            detail,
        }
    }

    pub fn is_counterexample(&self) -> bool {
        self.conclusion_held == Some(false)
    }
}

/// Counterexample verdicts kept in full per report; the count is exact.
pub const MAX_STORED_COUNTEREXAMPLES: usize = 1000;

/// Aggregate of one theorem over a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub theorem_id: &'static str,
    pub graphs_visited: u64,
    pub hypothesis_hits: u64,
    pub counterexample_count: u64,
    pub counterexamples: Vec<TheoremVerdict>,
    /// Isomorphism-class graph6 ids (see [`isomorphism_class_id`]) of the
    /// inputs where a non-strict bound was tight.
    pub equality_cases: BTreeSet<String>,
}

impl CheckReport {
    pub const CSV_HEADER: [&'static str; 5] = [
        "theorem_id",
        "graphs_visited",
        "hypothesis_hits",
        "counterexamples",
        "equality_cases",
    ];

    pub fn new(theorem_id: &'static str) -> Self {
        CheckReport {
            theorem_id,
            graphs_visited: 0,
            hypothesis_hits: 0,
            counterexample_count: 0,
            counterexamples: Vec::new(),
            equality_cases: BTreeSet::new(),
        }
    }

    pub fn record(&mut self, verdict: &TheoremVerdict, g: &Graph) {
        self.graphs_visited += 1;
        if !verdict.hypothesis_met {
            return;
        }
        self.hypothesis_hits += 1;
        if verdict.is_counterexample() {
            self.counterexample_count += 1;
            if self.counterexamples.len() < MAX_STORED_COUNTEREXAMPLES {
                self.counterexamples.push(verdict.clone());
            }
        }
        if verdict.equality {
            self.equality_cases.insert(isomorphism_class_id(g));
        }
    }

    /// Appends `later`, which must cover inputs visited after `self`'s.
    pub fn merge(&mut self, later: CheckReport) {
        debug_assert_eq!(self.theorem_id, later.theorem_id);
        self.graphs_visited += later.graphs_visited;
        self.hypothesis_hits += later.hypothesis_hits;
        self.counterexample_count += later.counterexample_count;
        let room = MAX_STORED_COUNTEREXAMPLES.saturating_sub(self.counterexamples.len());
        self.counterexamples.extend(later.counterexamples.into_iter().take(room));
        self.equality_cases.extend(later.equality_cases);
    }

    pub fn is_clean(&self) -> bool {
        self.counterexample_count == 0
    }

    pub fn csv_record(&self) -> [String; 5] {
        [
            self.theorem_id.to_string(),
            self.graphs_visited.to_string(),
            self.hypothesis_hits.to_string(),
            self.counterexample_count.to_string(),
            self.equality_cases.len().to_string(),
        ]
    }
}

/// Largest order for which [`isomorphism_class_id`] canonicalizes.
pub const MAX_CANONICAL_ORDER: usize = 8;

/// The lexicographically smallest graph6 string over all relabelings of
/// `g` when `n ≤ 8` (brute force over `n!` permutations), so isomorphic
/// graphs share an id. Larger graphs get their plain graph6 string.
pub fn isomorphism_class_id(g: &Graph) -> String {
    let n = g.order();
    if n > MAX_CANONICAL_ORDER {
        return emit_graph6(g);
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let top = pairs.len();
    // bit (top - 1 - k) for pair k: numeric order equals graph6 string order
    let mut index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in pairs.iter().enumerate() {
        index[i][j] = top - 1 - k;
        index[j][i] = top - 1 - k;
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let key = edges
            .iter()
            .fold(0u64, |acc, &(u, v)| acc | 1 << index[perm[u]][perm[v]]);
        best = best.min(key);
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let canon: Vec<(usize, usize)> = pairs
        .iter()
        .enumerate()
        .filter(|&(k, _)| best >> (top - 1 - k) & 1 == 1)
        .map(|(_, &p)| p)
        .collect();
    emit_graph6(&Graph::from_edge_list(n, &canon).expect("pairs are in range"))
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edge_list(n, edges).unwrap()
    }

    #[test]
    fn isomorphic_graphs_share_ids() {
        let a = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let b = g(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]);
        assert_eq!(isomorphism_class_id(&a), isomorphism_class_id(&b));
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_ne!(isomorphism_class_id(&a), isomorphism_class_id(&p4));
        let star = g(4, &[(3, 0), (3, 1), (3, 2)]);
        let star2 = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(isomorphism_class_id(&star), isomorphism_class_id(&star2));
    }

    #[test]
    fn permutations_are_exhaustive() {
        let mut p = vec![0, 1, 2, 3];
        let mut count = 1;
        while next_permutation(&mut p) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(p, vec![3, 2, 1, 0]);
    }

    #[test]
    fn report_bookkeeping() {
        let c4 = g(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let mut r = CheckReport::new("X");
        r.record(&TheoremVerdict::vacuous("X", &c4, String::new()), &c4);
        r.record(&TheoremVerdict::decided("X", &c4, true, true, String::new()), &c4);
        let mut later = CheckReport::new("X");
        later.record(&TheoremVerdict::decided("X", &c4, false, false, "bad".into()), &c4);
        r.merge(later);
        assert_eq!((r.graphs_visited, r.hypothesis_hits, r.counterexample_count), (3, 2, 1));
        assert_eq!(r.counterexamples[0].detail, "bad");
        assert_eq!(r.equality_cases.len(), 1);
        assert!(!r.is_clean());
    }
}
