//! graph6 codec, bit-exact per the nauty format description.
//!
//! For n <= 62 the first byte is `n + 63`; for 63 <= n <= 258047 the header
//! is `126` followed by three 6-bit groups of n (most significant first).
//! The upper triangle of the adjacency matrix is then packed column-major
//! (x(0,1), x(0,2), x(1,2), x(0,3), ...) six bits per byte, most significant
//! bit first, zero-padded, each group offset by +63 into the printable range
//! 63..=126.

use crate::error::{Error, Result};
use crate::graph::TreeGraph;

/// Encodes a tree as a graph6 string.
pub fn encode_graph6(t: &TreeGraph) -> String {
    let n = t.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.push(((n >> 12) & 0x3f) as u8 + 63);
        out.push(((n >> 6) & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    } else {
        // 8-byte header for n up to 2^36 - 1
        out.push(126);
        out.push(126);
        for shift in (0..6).rev() {
            out.push(((n >> (6 * shift)) & 0x3f) as u8 + 63);
        }
    }
    let mut group = 0u8;
    let mut bits = 0u8;
    for col in 1..n {
        for row in 0..col {
            group <<= 1;
            if t.has_edge(row, col) {
                group |= 1;
            }
            bits += 1;
            if bits == 6 {
                out.push(group + 63);
                group = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((group << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes a graph6 string into a tree. Errors with [`Error::MalformedGraph6`]
/// on format violations and [`Error::NotATree`] when the encoded graph is not
/// a tree.
pub fn decode_graph6(s: &str) -> Result<TreeGraph> {
    let bytes = s.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::MalformedGraph6("empty input".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::MalformedGraph6(format!("byte {b} outside 63..=126")));
    }
    let (n, body) = if bytes[0] == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            if bytes.len() < 8 {
                return Err(Error::MalformedGraph6("truncated 8-byte header".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[2..8] {
                n = (n << 6) | (b - 63) as usize;
            }
            (n, &bytes[8..])
        } else {
            if bytes.len() < 4 {
                return Err(Error::MalformedGraph6("truncated 4-byte header".into()));
            }
            let mut n = 0usize;
            for &b in &bytes[1..4] {
                n = (n << 6) | (b - 63) as usize;
            }
            (n, &bytes[4..])
        }
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };
    if n == 0 {
        return Err(Error::NotATree("graph6 encodes the empty graph".into()));
    }
    let nbits = n * (n - 1) / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return Err(Error::MalformedGraph6(format!(
            "expected {} body bytes for n = {}, got {}",
            nbytes,
            n,
            body.len()
        )));
    }
    let bit = |i: usize| -> bool { (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1 };
    // padding bits must be zero
    for i in nbits..nbytes * 6 {
        if bit(i) {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    let mut edges = Vec::new();
    let mut i = 0;
    for col in 1..n {
        for row in 0..col {
            if bit(i) {
                edges.push((row, col));
            }
            i += 1;
        }
    }
    TreeGraph::from_edges(n, &edges)
}
