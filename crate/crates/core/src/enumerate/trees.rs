//! Free (unlabeled) trees via level sequences.
//!
//! This is the Wright–Richmond–Odlyzko–McKay successor scheme: walk rooted
//! level sequences in reverse lexicographic order and keep only those whose
//! root is a canonical center. Each free tree is produced once. A level
//! sequence lists vertex depths in preorder, root first at depth 0.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MIN_TREE_ORDER: usize = 2;
pub const MAX_TREE_ORDER: usize = 18;

/// Next rooted level sequence after `seq` in reverse lexicographic order,
/// or `None` after the path. `p` overrides the position to advance.
fn next_rooted_tree(seq: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = seq.len() - 1;
            while seq[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while seq[q] != seq[p] - 1 {
        q -= 1;
    }
    let mut out = seq.to_vec();
    for i in p..out.len() {
        out[i] = out[i - p + q];
    }
    Some(out)
}

/// Splits a level sequence into the first subtree of the root (re-rooted,
/// depths shifted down by one) and the rest of the tree.
fn split_tree(seq: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut one_found = false;
    let mut m = seq.len();
    for (i, &d) in seq.iter().enumerate() {
        if d == 1 {
            if one_found {
                m = i;
                break;
            }
            one_found = true;
        }
    }
    let left = seq[1..m].iter().map(|&d| d - 1).collect();
    let rest = std::iter::once(0).chain(seq[m..].iter().copied()).collect();
    (left, rest)
}

/// `candidate` if it is a valid free-tree layout, otherwise the next valid one.
fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split_tree(&candidate);
    let left_height = left.iter().copied().max().unwrap_or(0);
    let rest_height = rest.iter().copied().max().unwrap_or(0);
    let valid = rest_height > left_height
        || (rest_height == left_height
            && (left.len() < rest.len() || (left.len() == rest.len() && left <= rest)));
    if valid {
        return Some(candidate);
    }

    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split_tree(&next);
        let new_left_height = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        let suffix = 1..=new_left_height + 1;
        let start = len - suffix.clone().count();
        for (slot, d) in next[start..].iter_mut().zip(suffix) {
            *slot = d;
        }
    }
    Some(next)
}

/// Iterator over the level sequences of all free trees of one order.
#[derive(Debug, Clone)]
pub struct FreeTreeSequences {
    state: Option<Vec<usize>>,
}

impl Iterator for FreeTreeSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let candidate = self.state.take()?;
        let tree = next_tree(candidate)?;
        self.state = next_rooted_tree(&tree, None);
        Some(tree)
    }
}

fn check_tree_order(n: usize) -> Result<()> {
    if !(MIN_TREE_ORDER..=MAX_TREE_ORDER).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "tree order {n} outside {MIN_TREE_ORDER}..={MAX_TREE_ORDER}"
        )));
    }
    Ok(())
}

/// Level sequences of every free tree on `n` vertices, `2 ≤ n ≤ 18`.
pub fn free_tree_sequences(n: usize) -> Result<FreeTreeSequences> {
    check_tree_order(n)?;
    let start: Vec<usize> = (0..=n / 2).chain(1..n.div_ceil(2)).collect();
    Ok(FreeTreeSequences { state: Some(start) })
}

/// The tree whose preorder depth list is `seq`; vertex `i` is the `i`-th
/// entry.
pub fn tree_from_level_sequence(seq: &[usize]) -> Graph {
    let mut edges = Vec::with_capacity(seq.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (v, &depth) in seq.iter().enumerate() {
        stack.truncate(depth);
        if let Some(&parent) = stack.last() {
            edges.push((parent, v));
        }
        stack.push(v);
    }
    Graph::from_edge_list(seq.len(), &edges).expect("level sequence edges are in range")
}

/// Every free tree on `n` vertices, each exactly once up to isomorphism.
pub fn enumerate_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    Ok(free_tree_sequences(n)?.map(|s| tree_from_level_sequence(&s)))
}

/// An isomorphism-complete form: the lexicographically largest level
/// sequence over rootings at a center, with children ordered by decreasing
/// subtree sequence.
pub fn canonical_tree_form(t: &Graph) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    centers(t)
        .into_iter()
        .map(|c| rooted_form(t, c, usize::MAX, 0))
        .max()
        .ok_or(Error::EmptyGraph)
}

fn rooted_form(t: &Graph, v: usize, parent: usize, depth: usize) -> Vec<usize> {
    let mut children: Vec<Vec<usize>> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_form(t, w, v, depth + 1))
        .collect();
    children.sort_unstable_by(|a, b| b.cmp(a));
    std::iter::once(depth).chain(children.into_iter().flatten()).collect()
}

/// One or two centers, found by repeatedly stripping leaves.
fn centers(t: &Graph) -> Vec<usize> {
    let n = t.order();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}
