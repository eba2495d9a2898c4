//! Isomorphism-free exhaustive generation of rooted and free trees.
//!
//! Rooted trees on `n` vertices correspond bijectively to canonical level
//! sequences (children ordered by non-increasing subtree sequence). The
//! successor rule walks them in lexicographically decreasing order, from the
//! path down to the star: find the last entry `p` of depth >= 2, its nearest
//! earlier ancestor level `q`, and tile the suffix with copies of the block
//! `[q, p)`. Free trees are the rooted trees whose level sequence equals the
//! centroid-rooted canonical code of the underlying tree, so each
//! isomorphism class survives exactly once.

use crate::canon::{canonical_code, tree_from_levels, CanonicalCode};
use crate::graph::{RootedTree, TreeGraph};

/// Iterator over canonical rooted level sequences in decreasing
/// lexicographic order.
struct LevelSequences {
    levels: Vec<u32>,
    started: bool,
    done: bool,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        LevelSequences {
            levels: (0..n as u32).collect(),
            started: false,
            done: n == 0,
        }
    }

    fn advance(&mut self) -> bool {
        let n = self.levels.len();
        // last position with depth >= 2
        let Some(p) = (0..n).rfind(|&i| self.levels[i] >= 2) else {
            return false;
        };
        let q = (0..p)
            .rfind(|&i| self.levels[i] == self.levels[p] - 1)
            .expect("depths descend to the root");
        for i in p..n {
            self.levels[i] = self.levels[i - (p - q)];
        }
        true
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.levels.clone());
        }
        if self.advance() {
            Some(self.levels.clone())
        } else {
            self.done = true;
            None
        }
    }
}

/// All rooted trees on `n` vertices, one per rooted-isomorphism class, in
/// ascending canonical level-sequence order.
pub fn enumerate_rooted_trees(n: usize) -> impl Iterator<Item = RootedTree> {
    assert!(n >= 1, "rooted trees need at least one vertex");
    let mut seqs: Vec<Vec<u32>> = LevelSequences::new(n).collect();
    seqs.reverse();
    seqs.into_iter().map(|levels| {
        let tree = tree_from_levels(&levels).expect("generated sequences are valid");
        RootedTree::new(tree, 0).expect("root 0 exists")
    })
}

/// Flat store of all rooted level sequences on `n` vertices in ascending
/// order, one byte per depth. Keeps multi-million-tree sweeps cheap on
/// memory by avoiding per-tree allocations.
pub(crate) struct RootedLevelArena {
    n: usize,
    data: Vec<u8>,
}

impl RootedLevelArena {
    pub(crate) fn new(n: usize) -> Self {
        assert!((1..=255).contains(&n), "arena supports 1 <= n <= 255");
        let mut data = Vec::new();
        for levels in LevelSequences::new(n) {
            data.extend(levels.iter().map(|&d| d as u8));
        }
        // generation order is descending; flip chunks to ascending
        let count = data.len() / n;
        for i in 0..count / 2 {
            let (a, b) = (i * n, (count - 1 - i) * n);
            for k in 0..n {
                data.swap(a + k, b + k);
            }
        }
        RootedLevelArena { n, data }
    }

    pub(crate) fn count(&self) -> usize {
        self.data.len() / self.n
    }

    pub(crate) fn rooted_tree(&self, i: usize) -> RootedTree {
        let levels: Vec<u32> =
            self.data[i * self.n..(i + 1) * self.n].iter().map(|&d| d as u32).collect();
        let tree = tree_from_levels(&levels).expect("arena sequences are valid");
        RootedTree::new(tree, 0).expect("root 0 exists")
    }
}

/// All free trees on `n` vertices, one per isomorphism class, in ascending
/// canonical-code order.
pub fn enumerate_free_trees(n: usize) -> impl Iterator<Item = TreeGraph> {
    assert!(n >= 1, "free trees need at least one vertex");
    let mut out: Vec<TreeGraph> = Vec::new();
    for levels in LevelSequences::new(n) {
        let tree = tree_from_levels(&levels).expect("generated sequences are valid");
        if canonical_code(&tree).levels() == levels.as_slice() {
            out.push(tree);
        }
    }
    out.reverse();
    out.into_iter()
}

/// Canonical codes of all free trees on `n` vertices, ascending. Avoids
/// re-deriving the code from the rebuilt tree.
pub fn enumerate_free_tree_codes(n: usize) -> Vec<CanonicalCode> {
    enumerate_free_trees(n).map(|t| canonical_code(&t)).collect()
}

/// Number of free trees on `n` vertices.
pub fn free_tree_count(n: usize) -> u64 {
    let mut count = 0u64;
    for levels in LevelSequences::new(n) {
        let tree = tree_from_levels(&levels).expect("generated sequences are valid");
        if canonical_code(&tree).levels() == levels.as_slice() {
            count += 1;
        }
    }
    count
}

/// Unordered pairs of free trees on `n` vertices, self-pairs included:
/// `t(n) * (t(n) + 1) / 2`.
pub fn pair_count(n: usize) -> u64 {
    let t = free_tree_count(n);
    t * (t + 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{rooted_canonical_levels, rooted_code};

    const FREE_COUNTS: [u64; 16] =
        [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];
    const ROOTED_COUNTS: [u64; 10] = [1, 1, 2, 4, 9, 20, 48, 115, 286, 719];

    #[test]
    fn rooted_counts_small() {
        for (i, &expect) in ROOTED_COUNTS.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_rooted_trees(n).count() as u64, expect, "n = {n}");
        }
    }

    #[test]
    fn free_counts_small() {
        for (i, &expect) in FREE_COUNTS.iter().enumerate().take(12) {
            let n = i + 1;
            assert_eq!(free_tree_count(n), expect, "n = {n}");
        }
    }

    #[test]
    fn free_trees_pairwise_distinct_codes_and_sorted() {
        for n in 1..11 {
            let codes = enumerate_free_tree_codes(n);
            for w in codes.windows(2) {
                assert!(w[0] < w[1], "codes out of order at n = {n}");
            }
        }
    }

    #[test]
    fn rooted_trees_distinct_and_sorted() {
        for n in 1..9 {
            let codes: Vec<Vec<u32>> =
                enumerate_rooted_trees(n).map(|rt| rooted_code(&rt)).collect();
            for w in codes.windows(2) {
                assert!(w[0] < w[1], "rooted codes out of order at n = {n}");
            }
        }
    }

    #[test]
    fn rooted_sequences_are_canonical() {
        for n in 1..9 {
            for rt in enumerate_rooted_trees(n) {
                let code = rooted_code(&rt);
                let rebuilt = tree_from_levels(&code).unwrap();
                assert_eq!(rooted_canonical_levels(&rebuilt, 0), code);
            }
        }
    }

    #[test]
    fn generated_trees_validate() {
        for n in 1..10 {
            for t in enumerate_free_trees(n) {
                assert_eq!(t.n(), n);
                assert_eq!(t.edges().len(), n - 1);
            }
        }
    }

    #[test]
    fn pair_counts_match_quadratic_formula() {
        assert_eq!(pair_count(4), 3);
        assert_eq!(pair_count(6), 21);
        assert_eq!(pair_count(10), 5671);
    }

    #[test]
    fn tiny_rooted_examples() {
        assert_eq!(enumerate_rooted_trees(1).count(), 1);
        assert_eq!(enumerate_rooted_trees(2).count(), 1);
        assert_eq!(enumerate_rooted_trees(3).count(), 2);
        assert_eq!(enumerate_rooted_trees(4).count(), 4);
    }
}
