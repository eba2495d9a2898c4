//! Exact characteristic polynomials of tree matrices and certified
//! largest-root enclosures.
//!
//! Characteristic polynomials are computed over arbitrary-precision integers
//! by eliminating the tree edge by edge: if blocks X and Y meet in a single
//! symmetric entry pair (u in X, v in Y), then
//! `det(X+Y) = det(X) det(Y) - det(X-u) det(Y-v)` (the off-diagonal entries
//! of xI - M are +-1, so their product is 1 for every matrix kind). A
//! post-order pass therefore carries, per subtree, the determinant with and
//! without the subtree root, in O(n^2) coefficient operations.
//!
//! Largest roots are isolated with Sturm-sequence counting on the squarefree
//! part and then narrowed by exact bisection, so enclosures are certificates
//! rather than floating-point estimates.

use crate::error::{Error, Result};
use crate::graph::{RootedTree, TreeGraph};
use crate::poly::{IntPoly, SturmChain};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Which symmetric matrix of the tree is under consideration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MatrixKind {
    /// A: 0/1 adjacency matrix.
    Adjacency,
    /// L = D - A.
    Laplacian,
    /// Q = D + A.
    SignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 3] =
        [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::SignlessLaplacian];

    /// Diagonal entry of xI - M at a vertex of the given degree.
    fn diagonal(self, degree: usize) -> IntPoly {
        match self {
            MatrixKind::Adjacency => IntPoly::x_minus(BigInt::zero()),
            MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
                IntPoly::x_minus(BigInt::from(degree))
            }
        }
    }
}

impl std::fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MatrixKind::Adjacency => write!(f, "adjacency"),
            MatrixKind::Laplacian => write!(f, "laplacian"),
            MatrixKind::SignlessLaplacian => write!(f, "signless-laplacian"),
        }
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "adjacency" | "a" => Ok(MatrixKind::Adjacency),
            "laplacian" | "l" => Ok(MatrixKind::Laplacian),
            "signless-laplacian" | "signless" | "q" => Ok(MatrixKind::SignlessLaplacian),
            other => Err(Error::UnknownFormat(format!("matrix kind '{other}'"))),
        }
    }
}

/// Monic integer characteristic polynomial of a chosen matrix kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharPoly {
    kind: MatrixKind,
    poly: IntPoly,
}

impl CharPoly {
    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    /// Coefficients in ascending order; index k holds the coefficient of x^k.
    pub fn coeffs(&self) -> &[BigInt] {
        self.poly.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().expect("characteristic polynomials are monic")
    }

    pub fn poly(&self) -> &IntPoly {
        &self.poly
    }

    pub fn from_parts(kind: MatrixKind, poly: IntPoly) -> Self {
        CharPoly { kind, poly }
    }
}

/// Per-subtree determinant pair: with and without the subtree root.
fn subtree_det_pair(t: &TreeGraph, kind: MatrixKind, root: usize) -> (IntPoly, IntPoly) {
    let n = t.n();
    // iterative post-order from the root
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
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
    let mut with_root: Vec<Option<IntPoly>> = vec![None; n];
    let mut without_root: Vec<Option<IntPoly>> = vec![None; n];
    for &v in order.iter().rev() {
        let mut det = kind.diagonal(t.degree(v));
        let mut det_minus = IntPoly::one();
        for &c in t.neighbors(v) {
            if parent[c] == v {
                let p_c = with_root[c].take().expect("children processed first");
                let q_c = without_root[c].take().expect("children processed first");
                let next = det.mul(&p_c).sub(&det_minus.mul(&q_c));
                det_minus = det_minus.mul(&p_c);
                det = next;
            }
        }
        with_root[v] = Some(det);
        without_root[v] = Some(det_minus);
    }
    (
        with_root[root].take().unwrap(),
        without_root[root].take().unwrap(),
    )
}

/// Exact characteristic polynomial `det(xI - M)` of the chosen matrix.
pub fn char_poly(t: &TreeGraph, kind: MatrixKind) -> CharPoly {
    let (p, _) = subtree_det_pair(t, kind, 0);
    CharPoly { kind, poly: p }
}

/// Characteristic polynomial of M with the root row and column deleted.
///
/// This is the principal submatrix of the full matrix: for the Laplacian
/// kinds the remaining diagonal keeps the original degrees, which is not the
/// matrix of the vertex-deleted subgraph.
pub fn root_deleted_char_poly(rt: &RootedTree, kind: MatrixKind) -> CharPoly {
    let (_, q) = subtree_det_pair(rt.tree(), kind, rt.root());
    CharPoly { kind, poly: q }
}

/// Certified enclosure of the largest real root: `[lo, hi]` with exact
/// rational endpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootEnclosure {
    lo: BigRational,
    hi: BigRational,
}

impl RootEnclosure {
    pub fn point(x: BigRational) -> Self {
        RootEnclosure { lo: x.clone(), hi: x }
    }

    /// Rebuilds an enclosure from stored endpoints. Requires `lo <= hi`.
    pub fn from_endpoints(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "enclosure endpoints out of order");
        RootEnclosure { lo, hi }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from(BigInt::from(2))
    }

    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().expect("midpoint fits in f64")
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_f64(&self, x: f64) -> bool {
        let x = BigRational::from_float(x).expect("finite");
        self.contains(&x)
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }
}

/// Default enclosure width, 1e-12.
pub fn default_root_width() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64.pow(12)))
}

struct LargestRootIsolation {
    sf: IntPoly,
    lo: BigRational,
    hi: BigRational,
}

/// Isolates the largest real root of the squarefree part: on return the
/// interval `(lo, hi]` contains exactly one distinct root and no root of the
/// polynomial exceeds `hi`.
fn isolate_largest(p: &IntPoly) -> LargestRootIsolation {
    let sf = p.squarefree_part();
    assert!(
        sf.degree().is_some_and(|d| d >= 1),
        "polynomial has no roots"
    );
    let chain = SturmChain::new(&sf);
    let bound = BigRational::from(sf.root_bound());
    let mut lo = -bound.clone();
    let mut hi = bound;
    let mut v_lo = chain.variations_at(&lo);
    let mut v_hi = chain.variations_at(&hi);
    assert!(v_lo > v_hi, "polynomial has no real roots");
    let two = BigRational::from(BigInt::from(2));
    while v_lo - v_hi > 1 {
        let mid = (&lo + &hi) / &two;
        let v_mid = chain.variations_at(&mid);
        if v_mid > v_hi {
            lo = mid;
            v_lo = v_mid;
        } else {
            hi = mid;
            v_hi = v_mid;
        }
    }
    LargestRootIsolation { sf, lo, hi }
}

/// Certified enclosure of width at most `width` around the maximal real root
/// of `p`. Panics if `p` has no real roots (never the case for symmetric
/// matrix spectra).
pub fn largest_root(p: &CharPoly, width: &BigRational) -> RootEnclosure {
    largest_root_of_poly(p.poly(), width)
}

pub(crate) fn largest_root_of_poly(p: &IntPoly, width: &BigRational) -> RootEnclosure {
    let iso = isolate_largest(p);
    let (mut lo, mut hi) = (iso.lo, iso.hi);
    let two = BigRational::from(BigInt::from(2));
    // the largest root r* is the only root in (lo, hi], so the squarefree
    // part is negative on (lo, r*) and positive on (r*, hi]
    while &hi - &lo > *width {
        let mid = (&lo + &hi) / &two;
        match iso.sf.sign_at(&mid) {
            0 => return RootEnclosure::point(mid),
            s if s > 0 => hi = mid,
            _ => lo = mid,
        }
    }
    RootEnclosure { lo, hi }
}

/// Enclosure of the adjacency spectral radius.
pub fn lambda1(t: &TreeGraph, width: &BigRational) -> RootEnclosure {
    largest_root(&char_poly(t, MatrixKind::Adjacency), width)
}

/// Enclosure of the Laplacian spectral radius.
pub fn q1(t: &TreeGraph, width: &BigRational) -> RootEnclosure {
    largest_root(&char_poly(t, MatrixKind::Laplacian), width)
}

/// Exact cospectrality: coefficient-wise equality of characteristic
/// polynomials of the chosen kind.
pub fn cospectral(a: &TreeGraph, b: &TreeGraph, kind: MatrixKind) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch { left: a.n(), right: b.n() });
    }
    Ok(char_poly(a, kind) == char_poly(b, kind))
}

/// Decides exactly whether two polynomials have the same largest real root.
///
/// The largest roots agree iff both equal the largest root of the gcd, which
/// is certified by Sturm counts of the (squarefree) gcd over each isolating
/// interval; no refinement loop is needed because the gcd's roots are a
/// subset of each polynomial's roots.
pub fn largest_roots_equal(p: &CharPoly, q: &CharPoly) -> bool {
    largest_roots_equal_polys(p.poly(), q.poly())
}

pub(crate) fn largest_roots_equal_polys(p: &IntPoly, q: &IntPoly) -> bool {
    let g = p.gcd(q);
    if g.degree().is_none_or(|d| d == 0) {
        return false;
    }
    let g_chain = SturmChain::new(&g.squarefree_part());
    for poly in [p, q] {
        let iso = isolate_largest(poly);
        if g_chain.roots_in(&iso.lo, &iso.hi) == 0 {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational_from_decimal_str;

    fn width(s: &str) -> BigRational {
        rational_from_decimal_str(s).unwrap()
    }

    fn coeffs_i64(p: &CharPoly) -> Vec<i64> {
        p.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn star4_adjacency_charpoly() {
        // K_{1,3}: x^4 - 3x^2
        let p = char_poly(&TreeGraph::star(4), MatrixKind::Adjacency);
        assert_eq!(coeffs_i64(&p), vec![0, 0, -3, 0, 1]);
    }

    #[test]
    fn p3_laplacian_charpoly() {
        // eigenvalues 0, 1, 3: x^3 - 4x^2 + 3x
        let p = char_poly(&TreeGraph::path(3), MatrixKind::Laplacian);
        assert_eq!(coeffs_i64(&p), vec![0, 3, -4, 1]);
    }

    #[test]
    fn single_vertex_charpolys() {
        for kind in MatrixKind::ALL {
            let p = char_poly(&TreeGraph::single(), kind);
            assert_eq!(coeffs_i64(&p), vec![0, 1]); // x
        }
    }

    #[test]
    fn root_deleted_p2_adjacency() {
        let t = TreeGraph::path(2);
        let rt = RootedTree::new(t, 0).unwrap();
        let p = root_deleted_char_poly(&rt, MatrixKind::Adjacency);
        assert_eq!(coeffs_i64(&p), vec![0, 1]); // x
    }

    #[test]
    fn root_deleted_keeps_original_degrees() {
        // P3 rooted at the center, Laplacian: remaining diagonal entries are
        // the original degrees (1, 1), so the result is (x-1)^2
        let t = TreeGraph::path(3);
        let rt = RootedTree::new(t, 1).unwrap();
        let p = root_deleted_char_poly(&rt, MatrixKind::Laplacian);
        assert_eq!(coeffs_i64(&p), vec![1, -2, 1]);
    }

    #[test]
    fn largest_root_of_quadratic() {
        let p = CharPoly::from_parts(MatrixKind::Adjacency, IntPoly::from_i64(&[-1, 0, 1]));
        let e = largest_root(&p, &width("1e-10"));
        assert!(e.contains(&BigRational::from(BigInt::one())));
        assert!(e.width() <= width("1e-10"));
    }

    #[test]
    fn path5_spectral_radius_is_sqrt3() {
        // lambda1(P_n) = 2 cos(pi/(n+1)); n = 5 gives sqrt(3)
        let e = lambda1(&TreeGraph::path(5), &width("1e-12"));
        let sqrt3 = 3f64.sqrt();
        assert!((e.midpoint_f64() - sqrt3).abs() < 1e-11);
    }

    #[test]
    fn star_laplacian_radius_is_n() {
        for n in 2..9usize {
            let e = q1(&TreeGraph::star(n), &width("1e-12"));
            assert!(e.contains(&BigRational::from(BigInt::from(n))));
        }
    }

    #[test]
    fn star6_invariants() {
        let t = TreeGraph::star(6);
        let l = lambda1(&t, &width("1e-12"));
        assert!((l.midpoint_f64() - 5f64.sqrt()).abs() < 1e-11);
        let q = q1(&t, &width("1e-12"));
        assert!((q.midpoint_f64() - 6.0).abs() < 1e-11);
    }

    #[test]
    fn single_vertex_radii_are_zero() {
        let t = TreeGraph::single();
        assert!(lambda1(&t, &width("1e-12")).contains(&BigRational::zero()));
        assert!(q1(&t, &width("1e-12")).contains(&BigRational::zero()));
    }

    #[test]
    fn cospectral_basics() {
        let p4 = TreeGraph::path(4);
        let s4 = TreeGraph::star(4);
        assert!(cospectral(&p4, &p4, MatrixKind::Adjacency).unwrap());
        assert!(!cospectral(&p4, &s4, MatrixKind::Adjacency).unwrap());
        assert!(matches!(
            cospectral(&p4, &TreeGraph::path(5), MatrixKind::Adjacency),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn laplacian_equals_signless_for_trees() {
        for t in [TreeGraph::path(7), TreeGraph::star(7)] {
            assert_eq!(
                char_poly(&t, MatrixKind::Laplacian).coeffs(),
                char_poly(&t, MatrixKind::SignlessLaplacian).coeffs()
            );
        }
    }

    #[test]
    fn enclosures_shrink_with_width() {
        let t = TreeGraph::path(6);
        let wide = lambda1(&t, &width("1e-3"));
        let narrow = lambda1(&t, &width("1e-9"));
        assert!(narrow.width() <= wide.width());
        assert!(wide.lo() <= narrow.lo() && narrow.hi() <= wide.hi());
    }

    #[test]
    fn largest_roots_equal_detects_shared_top_root() {
        // (x-2)(x-1) vs (x-2)(x+5): largest roots both 2
        let a = CharPoly::from_parts(MatrixKind::Adjacency, IntPoly::from_i64(&[2, -3, 1]));
        let b = CharPoly::from_parts(MatrixKind::Adjacency, IntPoly::from_i64(&[-10, 3, 1]));
        assert!(largest_roots_equal(&a, &b));
        // (x-2)(x-1) vs (x-1)(x+5): largest roots 2 vs 1, gcd root is 1
        let c = CharPoly::from_parts(MatrixKind::Adjacency, IntPoly::from_i64(&[-5, 4, 1]));
        assert!(!largest_roots_equal(&a, &c));
        // disjoint roots entirely
        let d = CharPoly::from_parts(MatrixKind::Adjacency, IntPoly::from_i64(&[-3, 0, 1]));
        assert!(!largest_roots_equal(&a, &d));
    }

    #[test]
    fn exact_root_hit_gives_point_enclosure() {
        // x^2 - 4: bisection from (-5, 5] hits 0 then 2 exactly... the
        // details do not matter, only that point enclosures are legal
        let p = CharPoly::from_parts(MatrixKind::Adjacency, IntPoly::from_i64(&[-4, 0, 1]));
        let e = largest_root(&p, &width("1e-12"));
        assert!(e.contains(&BigRational::from(BigInt::from(2))));
    }
}
