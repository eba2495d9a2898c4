//! Exact spectral and degree-based invariants of trees.
//!
//! The crate provides, over arbitrary-precision integer arithmetic:
//!
//! - validated tree values with canonical (centroid-rooted level-sequence)
//!   codes and a bit-exact graph6 codec ([`graph`], [`canon`], [`graph6`]);
//! - isomorphism-free enumeration of free and rooted trees ([`gen`]);
//! - exact characteristic polynomials of the adjacency, Laplacian, and
//!   signless Laplacian matrices, with certified largest-root enclosures
//!   from Sturm-sequence isolation ([`spectra`], [`poly`]);
//! - degree-power indices, the gap-to-distance transform, and certified
//!   verdicts for the three distance-measure inequalities ([`measures`]);
//! - rooted coalescence and certified cospectral families ([`coalescence`]);
//! - the pair-sweep survey harness with cached invariants ([`survey`]).

pub mod canon;
pub mod coalescence;
pub mod error;
pub mod gen;
pub mod graph;
pub mod graph6;
pub mod measures;
pub mod poly;
pub mod spectra;
pub mod survey;

pub use canon::{canonical_code, centroids, rooted_code, tree_from_levels, CanonicalCode};
pub use coalescence::{
    coalesce, cospectrally_rooted, find_cospectrally_rooted_pairs, generate_family,
};
pub use error::{Error, Result};
pub use gen::{enumerate_free_trees, enumerate_rooted_trees, free_tree_count, pair_count};
pub use graph::{RootedTree, TreeGraph};
pub use graph6::{decode_graph6, encode_graph6};
pub use measures::{
    conjecture_verdict, degree_power, distance, ConjectureId, GapEnclosure, MeasureConfig,
    PairVerdict,
};
pub use poly::{rational_from_decimal_str, IntPoly};
pub use spectra::{
    char_poly, cospectral, default_root_width, lambda1, largest_root, largest_roots_equal,
    q1, root_deleted_char_poly, CharPoly, MatrixKind, RootEnclosure,
};
pub use survey::{
    compute_invariants, counterexample_pairs, emit_table, load_cache, near_tie_pairs,
    store_cache, survey, InvariantRecord, RecordStore, SurveyRow, TableFormat,
};

// re-exported so downstream crates share the exact numeric types
pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Runs `f` on a dedicated thread pool with the requested worker count
/// (`None` uses all cores). Survey sweeps parallelize internally; results
/// are independent of the worker count.
pub fn with_thread_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match threads {
        None => f(),
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()
            .expect("thread pool")
            .install(f),
    }
}
