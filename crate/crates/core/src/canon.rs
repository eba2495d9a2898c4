//! Canonical forms: centroid-rooted level sequences.
//!
//! The canonical code of a free tree is the lexicographically maximal DFS
//! level sequence over all centroid rootings and child orderings. Two trees
//! are isomorphic iff their codes are equal, which makes the code usable as
//! a dedup key, a cache key, and a total order on isomorphism classes.

use crate::error::{Error, Result};
use crate::graph::{RootedTree, TreeGraph};
use serde::{Deserialize, Serialize};

/// Isomorphism-invariant level-sequence key of a free tree.
///
/// `levels[0] = 0` (the root); every later entry is positive and at most one
/// more than its predecessor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode {
    levels: Vec<u32>,
}

impl CanonicalCode {
    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn n(&self) -> usize {
        self.levels.len()
    }

    /// Rebuilds the tree encoded by this level sequence. Vertex `i` is the
    /// `i`-th vertex in preorder; its parent is the nearest earlier vertex
    /// one level up.
    pub fn to_tree(&self) -> TreeGraph {
        tree_from_levels(&self.levels).expect("canonical codes are valid level sequences")
    }
}

/// Builds a tree from a rooted DFS level sequence (root depth 0).
pub fn tree_from_levels(levels: &[u32]) -> Result<TreeGraph> {
    if levels.is_empty() || levels[0] != 0 {
        return Err(Error::NotATree("level sequence must start with depth 0".into()));
    }
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for i in 1..levels.len() {
        let d = levels[i];
        if d == 0 || d > levels[i - 1] + 1 {
            return Err(Error::NotATree(format!(
                "invalid level sequence entry {} at position {}",
                d, i
            )));
        }
        // parent: nearest earlier vertex at depth d - 1
        let parent = (0..i)
            .rev()
            .find(|&j| levels[j] == d - 1)
            .expect("entries decrease to 0 at the root");
        edges.push((parent, i));
    }
    TreeGraph::from_edges(levels.len(), &edges)
}

/// The 1 or 2 centroid vertices: minimizers of the largest component size
/// left by deleting the vertex.
pub fn centroids(t: &TreeGraph) -> Vec<usize> {
    let n = t.n();
    if n == 1 {
        return vec![0];
    }
    // subtree sizes with the tree hung at vertex 0, computed iteratively
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in t.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                parent[v] = u;
                stack.push(v);
            }
        }
    }
    let mut size = vec![1usize; n];
    for &u in order.iter().rev() {
        if parent[u] != usize::MAX {
            size[parent[u]] += size[u];
        }
    }
    let mut weight = vec![0usize; n];
    for v in 0..n {
        let mut w = n - size[v]; // the component containing the parent
        for &c in t.neighbors(v) {
            if parent[c] == v {
                w = w.max(size[c]);
            }
        }
        weight[v] = w;
    }
    let min = *weight.iter().min().unwrap();
    (0..n).filter(|&v| weight[v] == min).collect()
}

/// Canonical (lexicographically maximal) DFS level sequence of `t` rooted at
/// `root`: children are visited in non-increasing order of their subtree
/// sequences.
pub fn rooted_canonical_levels(t: &TreeGraph, root: usize) -> Vec<u32> {
    fn subtree(t: &TreeGraph, v: usize, parent: usize) -> Vec<u32> {
        let mut children: Vec<Vec<u32>> = t
            .neighbors(v)
            .iter()
            .filter(|&&c| c != parent)
            .map(|&c| subtree(t, c, v))
            .collect();
        children.sort_unstable_by(|a, b| b.cmp(a));
        let mut out = Vec::with_capacity(1 + children.iter().map(Vec::len).sum::<usize>());
        out.push(0);
        for child in children {
            out.extend(child.into_iter().map(|d| d + 1));
        }
        out
    }
    subtree(t, root, usize::MAX)
}

/// Canonical rooted level sequence of a rooted tree (root fixed).
pub fn rooted_code(rt: &RootedTree) -> Vec<u32> {
    rooted_canonical_levels(rt.tree(), rt.root())
}

/// The canonical code of a free tree: the larger of the canonical sequences
/// over its 1 or 2 centroid rootings.
pub fn canonical_code(t: &TreeGraph) -> CanonicalCode {
    let levels = centroids(t)
        .into_iter()
        .map(|c| rooted_canonical_levels(t, c))
        .max()
        .expect("every tree has a centroid");
    CanonicalCode { levels }
}
