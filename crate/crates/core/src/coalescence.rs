//! Rooted coalescence and cospectral tree families.
//!
//! Identifying the roots of two rooted trees yields a tree on
//! `n_g + n_k - 1` vertices. When two rooted trees agree both on the full
//! characteristic polynomial and on the polynomial of the principal
//! submatrix with the root row/column deleted ("cospectrally rooted"),
//! coalescing each with the same third tree produces a cospectral pair for
//! that matrix kind. Every emitted pair is re-certified by exact integer
//! polynomial equality; a certification failure is an error, never a
//! silently dropped pair.

use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::graph::{RootedTree, TreeGraph};
use crate::spectra::{char_poly, root_deleted_char_poly, CharPoly, MatrixKind};

/// Vertex amalgamation: identifies `g.root` with `k.root`.
///
/// Vertices of `g` keep their labels; vertices of `k` other than its root
/// are appended after them in label order.
pub fn coalesce(g: &RootedTree, k: &RootedTree) -> TreeGraph {
    let ng = g.n();
    let map = |v: usize| -> usize {
        use std::cmp::Ordering::*;
        match v.cmp(&k.root()) {
            Equal => g.root(),
            Less => ng + v,
            Greater => ng + v - 1,
        }
    };
    let mut edges = g.tree().edges();
    edges.extend(k.tree().edges().iter().map(|&(u, v)| (map(u), map(v))));
    TreeGraph::from_edges(ng + k.n() - 1, &edges)
        .expect("amalgamation of trees at a vertex is a tree")
}

/// True iff the two rooted trees are cospectrally rooted for `kind`: equal
/// characteristic polynomials and equal root-deleted polynomials, exactly.
pub fn cospectrally_rooted(g: &RootedTree, h: &RootedTree, kind: MatrixKind) -> Result<bool> {
    if g.n() != h.n() {
        return Err(Error::SizeMismatch { left: g.n(), right: h.n() });
    }
    Ok(char_poly(g.tree(), kind) == char_poly(h.tree(), kind)
        && root_deleted_char_poly(g, kind) == root_deleted_char_poly(h, kind))
}

/// All unordered pairs of distinct rooted trees on `n` vertices that are
/// cospectrally rooted for `kind`, in enumeration order.
///
/// Pairs whose underlying free trees are isomorphic (but rooted differently)
/// are included: they still produce non-isomorphic coalescences.
///
/// Runs in two passes so multi-million-tree vertex counts stay cheap on
/// memory: a parallel pass hashes every tree's polynomial pair, then only
/// hash-colliding trees are rebuilt and compared exactly.
pub fn find_cospectrally_rooted_pairs(
    n: usize,
    kind: MatrixKind,
) -> Vec<(RootedTree, RootedTree)> {
    use rayon::prelude::*;
    use std::hash::{Hash, Hasher};

    assert!(n >= 2, "rooted pairs need at least two vertices");
    let arena = crate::gen::RootedLevelArena::new(n);
    let key_of = |rt: &RootedTree| (char_poly(rt.tree(), kind), root_deleted_char_poly(rt, kind));
    let hashes: Vec<u64> = (0..arena.count())
        .into_par_iter()
        .map(|i| {
            let mut hasher = std::collections::hash_map::DefaultHasher::new();
            key_of(&arena.rooted_tree(i)).hash(&mut hasher);
            hasher.finish()
        })
        .collect();
    let mut by_hash: Vec<u32> = (0..hashes.len() as u32).collect();
    by_hash.sort_unstable_by_key(|&i| hashes[i as usize]);
    let mut candidates: Vec<u32> = Vec::new();
    for run in by_hash.chunk_by(|&a, &b| hashes[a as usize] == hashes[b as usize]) {
        if run.len() >= 2 {
            candidates.extend_from_slice(run);
        }
    }
    candidates.sort_unstable();
    let keyed: Vec<(u32, RootedTree, (CharPoly, CharPoly))> = candidates
        .into_par_iter()
        .map(|i| {
            let rt = arena.rooted_tree(i as usize);
            let key = key_of(&rt);
            (i, rt, key)
        })
        .collect();
    let mut by_key: std::collections::HashMap<&(CharPoly, CharPoly), Vec<usize>> =
        std::collections::HashMap::new();
    for (slot, (_, _, key)) in keyed.iter().enumerate() {
        by_key.entry(key).or_default().push(slot);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for group in by_key.values() {
        for (a, &i) in group.iter().enumerate() {
            for &j in &group[a + 1..] {
                pairs.push((i.min(j), i.max(j)));
            }
        }
    }
    pairs.sort_unstable_by_key(|&(i, j)| (keyed[i].0, keyed[j].0));
    pairs
        .into_iter()
        .map(|(i, j)| (keyed[i].1.clone(), keyed[j].1.clone()))
        .collect()
}

/// Coalesces a cospectrally rooted seed pair with each attachment and
/// certifies every resulting pair cospectral by exact polynomial equality.
///
/// Pairs that come out isomorphic (equal canonical codes) are dropped; the
/// remaining pairs are genuine cospectral mates. Returns
/// [`Error::NotCospectrallyRooted`] when the seeds fail the precondition and
/// [`Error::CertificationFailure`] if any coalesced pair fails the exact
/// cospectrality check.
pub fn generate_family(
    g: &RootedTree,
    h: &RootedTree,
    kind: MatrixKind,
    attachments: &[RootedTree],
) -> Result<Vec<(TreeGraph, TreeGraph)>> {
    if !cospectrally_rooted(g, h, kind)? {
        return Err(Error::NotCospectrallyRooted);
    }
    let mut out = Vec::with_capacity(attachments.len());
    for k in attachments {
        let a = coalesce(g, k);
        let b = coalesce(h, k);
        if char_poly(&a, kind) != char_poly(&b, kind) {
            return Err(Error::CertificationFailure(format!(
                "attachment on {} vertices produced a non-cospectral pair",
                k.n()
            )));
        }
        if canonical_code(&a) == canonical_code(&b) {
            continue; // isomorphic coalescences carry no information
        }
        out.push((a, b));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_code;

    fn rooted(t: TreeGraph, root: usize) -> RootedTree {
        RootedTree::new(t, root).unwrap()
    }

    #[test]
    fn coalescing_with_single_vertex_is_identity() {
        let g = rooted(TreeGraph::path(5), 2);
        let k = rooted(TreeGraph::single(), 0);
        let merged = coalesce(&g, &k);
        assert_eq!(canonical_code(&merged), canonical_code(g.tree()));
    }

    #[test]
    fn two_paths_make_a_longer_path() {
        let a = rooted(TreeGraph::path(2), 1);
        let b = rooted(TreeGraph::path(2), 0);
        let merged = coalesce(&a, &b);
        assert_eq!(canonical_code(&merged), canonical_code(&TreeGraph::path(3)));
    }

    #[test]
    fn star_center_plus_path_end_makes_a_spider() {
        let g = rooted(TreeGraph::star(4), 0);
        let k = rooted(TreeGraph::path(3), 0);
        let merged = coalesce(&g, &k);
        assert_eq!(merged.n(), 6);
        // merged vertex degree = 3 + 1
        assert_eq!(merged.degree(g.root()), 4);
        assert_eq!(merged.degree_sequence(), vec![4, 2, 1, 1, 1, 1]);
    }

    #[test]
    fn cospectrally_rooted_reflexive_and_negative_cases() {
        let p4 = TreeGraph::path(4);
        let end = rooted(p4.clone(), 0);
        let inner = rooted(p4.clone(), 1);
        for kind in MatrixKind::ALL {
            assert!(cospectrally_rooted(&end, &end, kind).unwrap());
        }
        // root-deleted polynomials differ: P3 vs P1 + P2
        assert!(!cospectrally_rooted(&end, &inner, MatrixKind::Adjacency).unwrap());
        assert!(matches!(
            cospectrally_rooted(&end, &rooted(TreeGraph::path(3), 0), MatrixKind::Adjacency),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn no_laplacian_pairs_on_four_vertices() {
        assert!(find_cospectrally_rooted_pairs(4, MatrixKind::Laplacian).is_empty());
    }

    #[test]
    fn family_rejects_non_cospectrally_rooted_seeds() {
        let g = rooted(TreeGraph::path(4), 0);
        let h = rooted(TreeGraph::star(4), 0);
        let att = [rooted(TreeGraph::single(), 0)];
        assert!(matches!(
            generate_family(&g, &h, MatrixKind::Laplacian, &att),
            Err(Error::NotCospectrallyRooted)
        ));
    }

    #[test]
    fn family_from_identical_underlying_tree_with_single_vertex_attachment() {
        // a seed pair with isomorphic members is legal; the single-vertex
        // attachment then reproduces the (isomorphic) seed pair, which is
        // filtered out
        let p5 = TreeGraph::path(5);
        let a = rooted(p5.clone(), 0);
        let b = rooted(p5.clone(), 4);
        assert!(cospectrally_rooted(&a, &b, MatrixKind::Laplacian).unwrap());
        let fam =
            generate_family(&a, &b, MatrixKind::Laplacian, &[rooted(TreeGraph::single(), 0)])
                .unwrap();
        assert!(fam.is_empty());
    }

    #[test]
    fn merged_vertex_degree_adds_up() {
        let g = rooted(TreeGraph::star(5), 0);
        let k = rooted(TreeGraph::path(4), 1);
        let merged = coalesce(&g, &k);
        assert_eq!(
            merged.degree(g.root()),
            g.tree().degree(g.root()) + k.tree().degree(k.root())
        );
    }
}
