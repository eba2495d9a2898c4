//! Independent oracles shared by the integration tests. Everything here is
//! deliberately written against the raw matrix/graph definitions, not the
//! library's computation paths.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use treespectra::{MatrixKind, TreeGraph};

/// Labeled tree from a Prufer sequence (entries in `0..n`, length `n - 2`).
pub fn prufer_to_tree(n: usize, seq: &[usize]) -> TreeGraph {
    assert_eq!(seq.len() + 2, n);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always remains");
        edges.push((leaf, s));
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let (u, v) = (last.next().unwrap(), last.next().unwrap());
    edges.push((u, v));
    TreeGraph::from_edges(n, &edges).expect("Prufer sequences encode trees")
}

/// All labeled trees on `n` vertices (n^(n-2) of them), via Prufer sequences.
pub fn all_labeled_trees(n: usize) -> Vec<TreeGraph> {
    assert!(n >= 2);
    if n == 2 {
        return vec![TreeGraph::from_edges(2, &[(0, 1)]).unwrap()];
    }
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        out.push(prufer_to_tree(n, &seq));
        let mut i = seq.len();
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            seq[i] += 1;
            if seq[i] < n {
                break;
            }
            seq[i] = 0;
        }
    }
}

/// Backtracking unrooted-isomorphism test.
pub fn isomorphic(a: &TreeGraph, b: &TreeGraph) -> bool {
    if a.n() != b.n() || a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    (0..b.n()).any(|rb| rooted_isomorphic(a, 0, b, rb))
}

/// Backtracking rooted-isomorphism test (roots must correspond).
pub fn rooted_isomorphic(a: &TreeGraph, ra: usize, b: &TreeGraph, rb: usize) -> bool {
    fn subtree_match(
        a: &TreeGraph,
        va: usize,
        pa: usize,
        b: &TreeGraph,
        vb: usize,
        pb: usize,
    ) -> bool {
        let ca: Vec<usize> = a.neighbors(va).iter().copied().filter(|&c| c != pa).collect();
        let cb: Vec<usize> = b.neighbors(vb).iter().copied().filter(|&c| c != pb).collect();
        if ca.len() != cb.len() {
            return false;
        }
        // match children by backtracking over assignments
        fn assign(
            a: &TreeGraph,
            va: usize,
            ca: &[usize],
            b: &TreeGraph,
            vb: usize,
            cb: &[usize],
            used: &mut Vec<bool>,
            k: usize,
        ) -> bool {
            if k == ca.len() {
                return true;
            }
            for j in 0..cb.len() {
                if !used[j] && subtree_match(a, ca[k], va, b, cb[j], vb) {
                    used[j] = true;
                    if assign(a, va, ca, b, vb, cb, used, k + 1) {
                        return true;
                    }
                    used[j] = false;
                }
            }
            false
        }
        let mut used = vec![false; cb.len()];
        assign(a, va, &ca, b, vb, &cb, &mut used, 0)
    }
    a.n() == b.n() && subtree_match(a, ra, usize::MAX, b, rb, usize::MAX)
}

/// Dense integer matrix of the requested kind.
pub fn matrix_of(t: &TreeGraph, kind: MatrixKind) -> Vec<Vec<BigInt>> {
    let n = t.n();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for u in 0..n {
        for &v in t.neighbors(u) {
            m[u][v] = match kind {
                MatrixKind::Adjacency | MatrixKind::SignlessLaplacian => BigInt::one(),
                MatrixKind::Laplacian => -BigInt::one(),
            };
        }
        if kind != MatrixKind::Adjacency {
            m[u][u] = BigInt::from(t.degree(u));
        }
    }
    m
}

/// Deletes one row and column.
pub fn principal_deleted(m: &[Vec<BigInt>], v: usize) -> Vec<Vec<BigInt>> {
    let keep: Vec<usize> = (0..m.len()).filter(|&i| i != v).collect();
    keep.iter()
        .map(|&i| keep.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}

/// Exact characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recurrence (all divisions exact). Ascending coefficients, length n + 1.
pub fn faddeev_leverrier(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let n = m.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut work = vec![vec![BigInt::zero(); n]; n]; // M_0 = 0
    for k in 1..=n {
        // M_k = A * M_{k-1} + c_{n-k+1} * I
        let mut next = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for l in 0..n {
                    if !m[i][l].is_zero() {
                        s += &m[i][l] * &work[l][j];
                    }
                }
                next[i][j] = s;
            }
        }
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        // c_{n-k} = -tr(A * M_k) / k
        let mut tr = BigInt::zero();
        for i in 0..n {
            for l in 0..n {
                if !m[i][l].is_zero() {
                    tr += &m[i][l] * &next[l][i];
                }
            }
        }
        let (q, r) = num_integer::Integer::div_rem(&-tr, &BigInt::from(k));
        assert!(r.is_zero(), "Faddeev-LeVerrier division must be exact");
        coeffs[n - k] = q;
        work = next;
    }
    coeffs
}

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
pub fn jacobi_max_eigenvalue(t: &TreeGraph, kind: MatrixKind) -> f64 {
    let n = t.n();
    let mut a = vec![vec![0.0f64; n]; n];
    for (i, row) in matrix_of(t, kind).iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            a[i][j] = i64::try_from(x).unwrap() as f64;
        }
    }
    for _sweep in 0..64 {
        let mut off = 0.0;
        for p in 0..n {
            for q in p + 1..n {
                off += a[p][q] * a[p][q];
            }
        }
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t_rot = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t_rot * t_rot + 1.0).sqrt();
                let s = t_rot * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

/// Free-tree counts t(n) for n = 1..=16.
pub const FREE_TREE_COUNTS: [u64; 16] =
    [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320];
