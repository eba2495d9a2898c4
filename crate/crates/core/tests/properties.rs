//! Property tests: relabeling invariance of canonical codes, graph6
//! round-trips, coalescence bookkeeping, and sigma-independence of verdicts.

mod common;

use common::prufer_to_tree;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use treespectra::{
    canonical_code, coalesce, conjecture_verdict, decode_graph6, default_root_width, distance,
    encode_graph6, ConjectureId, MeasureConfig, RootedTree, TreeGraph,
};

/// Random tree on 2..=10 vertices via a Prufer sequence.
fn arb_tree() -> impl Strategy<Value = TreeGraph> {
    (2usize..=10)
        .prop_flat_map(|n| {
            if n == 2 {
                Just(Vec::new()).boxed()
            } else {
                prop::collection::vec(0..n, n - 2).boxed()
            }
            .prop_map(move |seq| prufer_to_tree(n, &seq))
        })
}

fn arb_tree_sized(n: usize) -> impl Strategy<Value = TreeGraph> {
    prop::collection::vec(0..n, n - 2).prop_map(move |seq| prufer_to_tree(n, &seq))
}

fn arb_permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn canonical_code_invariant_under_relabeling(
        t in arb_tree(),
        seed in any::<u64>(),
    ) {
        // 100 relabelings per generated tree
        let code = canonical_code(&t);
        let mut runner = proptest::test_runner::TestRunner::deterministic();
        let _ = seed;
        for _ in 0..100 {
            let perm = arb_permutation(t.n())
                .new_tree(&mut runner)
                .unwrap()
                .current();
            let relabeled = t.relabel(&perm).unwrap();
            prop_assert_eq!(canonical_code(&relabeled), code.clone());
        }
    }

    #[test]
    fn graph6_roundtrip_is_identity_on_labeled_adjacency(t in arb_tree()) {
        let decoded = decode_graph6(&encode_graph6(&t)).unwrap();
        prop_assert_eq!(decoded, t);
    }

    #[test]
    fn coalescence_bookkeeping(
        (g, gr) in arb_tree_sized(8).prop_flat_map(|t| {
            let n = t.n();
            (Just(t), 0..n)
        }),
        (k, kr) in arb_tree_sized(6).prop_flat_map(|t| {
            let n = t.n();
            (Just(t), 0..n)
        }),
    ) {
        let g = RootedTree::new(g, gr).unwrap();
        let k = RootedTree::new(k, kr).unwrap();
        let merged = coalesce(&g, &k);
        // vertex and edge counts (from_edges already validated tree-ness)
        prop_assert_eq!(merged.n(), g.n() + k.n() - 1);
        prop_assert_eq!(merged.edges().len(), merged.n() - 1);
        // merged vertex degree adds up
        prop_assert_eq!(
            merged.degree(g.root()),
            g.tree().degree(g.root()) + k.tree().degree(k.root())
        );
    }

    #[test]
    fn distance_transform_properties(
        a in -50.0f64..50.0,
        b in -50.0f64..50.0,
        sigma in prop::sample::select(vec![0.25f64, 1.0, 3.0]),
    ) {
        let d = distance(a, b, sigma).unwrap();
        prop_assert!((0.0..1.0).contains(&d));
        prop_assert_eq!(d, distance(b, a, sigma).unwrap());
        if a == b {
            prop_assert_eq!(d, 0.0);
        } else {
            prop_assert!(d > 0.0);
        }
    }

    #[test]
    fn verdicts_are_sigma_independent(
        a in arb_tree_sized(7),
        b in arb_tree_sized(7),
        c in prop::sample::select(ConjectureId::ALL.to_vec()),
    ) {
        let mut results = Vec::new();
        for sigma in [0.5, 1.0, 10.0] {
            let cfg = MeasureConfig::new(sigma, default_root_width()).unwrap();
            results.push(conjecture_verdict(&a, &b, c, &cfg).unwrap().holds);
        }
        prop_assert!(results.windows(2).all(|w| w[0] == w[1]));
    }
}
