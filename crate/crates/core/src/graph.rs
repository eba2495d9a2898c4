//! Tree representation: validated adjacency lists for free and rooted trees.
//!
//! A [`TreeGraph`] is a connected acyclic simple graph on `n >= 1` vertices,
//! stored as per-vertex neighbor lists. All operations treat values as
//! immutable; vertices are 0-indexed everywhere, including file formats.

use crate::error::{Error, Result};

/// A connected acyclic simple graph on `n` vertices.
///
/// Invariants (enforced by [`TreeGraph::from_edges`]): exactly `n - 1` edges,
/// connected, no self-loops or parallel edges, symmetric adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeGraph {
    n: usize,
    adj: Vec<Vec<usize>>,
}

impl TreeGraph {
    /// Builds a validated tree from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NotATree("a tree has at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "expected {} edges for n = {}, got {}",
                n - 1,
                n,
                edges.len()
            )));
        }
        let mut adj = vec![Vec::new(); n];
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::BadIndex { index: u, n });
            }
            if v >= n {
                return Err(Error::BadIndex { index: v, n });
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at vertex {u}")));
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return Err(Error::DuplicateEdge { u: key.0, v: key.1 });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        let t = TreeGraph { n, adj };
        if !t.is_connected() {
            return Err(Error::NotATree("graph is disconnected".into()));
        }
        Ok(t)
    }

    /// The one-vertex tree.
    pub fn single() -> Self {
        TreeGraph { n: 1, adj: vec![Vec::new()] }
    }

    /// The path on `n` vertices, 0 - 1 - ... - (n-1).
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("path is a tree")
    }

    /// The star on `n` vertices with center 0.
    pub fn star(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
        Self::from_edges(n, &edges).expect("star is a tree")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges as `(min, max)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.n - 1);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Degrees in descending order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// True iff `u` and `v` are adjacent.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut found = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    found += 1;
                    stack.push(v);
                }
            }
        }
        found == self.n
    }

    /// Applies a vertex relabeling. `perm[v]` is the new label of vertex `v`.
    /// Used by isomorphism-invariance tests; `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        let edges: Vec<_> = self
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Self::from_edges(self.n, &edges)
    }
}

/// A tree together with a distinguished root vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RootedTree {
    tree: TreeGraph,
    root: usize,
}

impl RootedTree {
    pub fn new(tree: TreeGraph, root: usize) -> Result<Self> {
        if root >= tree.n() {
            return Err(Error::BadIndex { index: root, n: tree.n() });
        }
        Ok(RootedTree { tree, root })
    }

    pub fn tree(&self) -> &TreeGraph {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_nontrivial_tree() {
        let t = TreeGraph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(t.n(), 2);
        assert_eq!(t.edges(), vec![(0, 1)]);
    }

    #[test]
    fn p4_from_edges() {
        let t = TreeGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(t.degree_sequence(), vec![2, 2, 1, 1]);
    }

    #[test]
    fn wrong_edge_count_is_not_a_tree() {
        let err = TreeGraph::from_edges(3, &[(0, 1)]).unwrap_err();
        assert!(matches!(err, Error::NotATree(_)));
    }

    #[test]
    fn cycle_rejected() {
        // 4 vertices, 3 edges, but contains a triangle and is disconnected
        let err = TreeGraph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap_err();
        assert!(matches!(err, Error::NotATree(_)));
    }

    #[test]
    fn bad_index_and_duplicate_edge() {
        assert!(matches!(
            TreeGraph::from_edges(2, &[(0, 5)]).unwrap_err(),
            Error::BadIndex { index: 5, n: 2 }
        ));
        assert!(matches!(
            TreeGraph::from_edges(3, &[(0, 1), (1, 0)]).unwrap_err(),
            Error::DuplicateEdge { u: 0, v: 1 }
        ));
    }

    #[test]
    fn self_loop_rejected() {
        assert!(matches!(
            TreeGraph::from_edges(2, &[(1, 1)]).unwrap_err(),
            Error::NotATree(_)
        ));
    }

    #[test]
    fn single_vertex_is_a_tree() {
        let t = TreeGraph::from_edges(1, &[]).unwrap();
        assert_eq!(t.n(), 1);
        assert_eq!(t.degree_sequence(), vec![0]);
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(TreeGraph::star(6).degree_sequence(), vec![5, 1, 1, 1, 1, 1]);
        assert_eq!(TreeGraph::path(6).degree_sequence(), vec![2, 2, 2, 2, 1, 1]);
        // spider with legs (1, 2, 2) on 6 vertices
        let spider =
            TreeGraph::from_edges(6, &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5)]).unwrap();
        assert_eq!(spider.degree_sequence(), vec![3, 2, 2, 1, 1, 1]);
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        for n in 1..9 {
            let t = TreeGraph::path(n);
            assert_eq!(t.degree_sequence().iter().sum::<usize>(), 2 * (n - 1));
        }
    }

    #[test]
    fn rooted_tree_root_validated() {
        let t = TreeGraph::path(3);
        assert!(RootedTree::new(t.clone(), 2).is_ok());
        assert!(matches!(
            RootedTree::new(t, 3).unwrap_err(),
            Error::BadIndex { index: 3, n: 3 }
        ));
    }
}
