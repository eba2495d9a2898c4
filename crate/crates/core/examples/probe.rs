//! Scratch probe used during development: Laplacian cospectrally-rooted
//! pairs at one n, with adjacency-rooted status.

use treespectra::*;

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(19);
    for (g, h) in find_cospectrally_rooted_pairs(n, MatrixKind::Laplacian) {
        let a_rooted = cospectrally_rooted(&g, &h, MatrixKind::Adjacency).unwrap();
        let a_tree = cospectral(g.tree(), h.tree(), MatrixKind::Adjacency).unwrap();
        println!(
            "n={n}: {}:{} {}:{} adjacency_rooted={a_rooted} adjacency_tree={a_tree}",
            encode_graph6(g.tree()),
            g.root(),
            encode_graph6(h.tree()),
            h.root(),
        );
    }
}
