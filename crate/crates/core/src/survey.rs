//! Pair-sweep harness: per-tree invariants computed once, all unordered
//! pairs (self-pairs included) compared per conjecture, one table row per
//! vertex count.
//!
//! The sweep is O(t) spectral computations plus O(t^2) scalar comparisons.
//! Pair comparisons first try a floating-point fast path with certified
//! margins (enclosure widths plus a conservative rounding slack); only pairs
//! whose gaps are too close for the margins fall through to the exact
//! protocol in [`crate::measures`]. Counts are accumulated per worker and
//! summed, so results are independent of thread count and scheduling.
//!
//! The invariant cache is versioned JSON-lines: a `{"version":N}` header,
//! then one record per line keyed by `(n, canonical code)`, with polynomial
//! coefficients and enclosure endpoints as decimal strings (safe for
//! arbitrary precision).

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::gen::enumerate_free_trees;
use crate::graph::TreeGraph;
use crate::measures::{decide_gap_comparison, degree_power, ConjectureId, Gap, MeasureConfig};
use crate::poly::IntPoly;
use crate::spectra::{char_poly, largest_root, CharPoly, MatrixKind, RootEnclosure};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::Path;

/// Everything the sweep needs about one tree, computed once.
#[derive(Debug, Clone)]
pub struct InvariantRecord {
    pub code: CanonicalCode,
    pub n: usize,
    pub f2: u64,
    pub lambda1: RootEnclosure,
    pub q1: RootEnclosure,
    pub charpoly_a: CharPoly,
    pub charpoly_l: CharPoly,
}

/// One table row: pair count and per-conjecture counterexample counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub n: usize,
    pub pair_count: u64,
    pub counterexamples: BTreeMap<ConjectureId, u64>,
    pub undecidable: u64,
}

/// Computes the full invariant bundle for one tree.
pub fn compute_invariants(t: &TreeGraph, cfg: &MeasureConfig) -> InvariantRecord {
    let n = t.n();
    let code = canonical_code(t);
    let f2 = u64::try_from(&degree_power(t, 2)).expect("F2 fits in u64");
    debug_assert!(f2 >= 2 * (n as u64 - 1) || n == 1);
    let charpoly_a = char_poly(t, MatrixKind::Adjacency);
    let charpoly_l = char_poly(t, MatrixKind::Laplacian);
    let lambda1 = largest_root(&charpoly_a, &cfg.root_width);
    let q1 = largest_root(&charpoly_l, &cfg.root_width);
    InvariantRecord { code, n, f2, lambda1, q1, charpoly_a, charpoly_l }
}

// ---------------------------------------------------------------------------
// pair sweep
// ---------------------------------------------------------------------------

/// Conservative bound on accumulated f64 rounding in the fast path.
const FP_SLACK: f64 = 1e-9;

struct FastRec {
    f2: u64,
    l_mid: f64,
    l_w: f64,
    q_mid: f64,
    q_w: f64,
}

impl FastRec {
    fn new(r: &InvariantRecord) -> Self {
        let width_f64 = |e: &RootEnclosure| e.width().to_f64().unwrap_or(f64::INFINITY);
        FastRec {
            f2: r.f2,
            l_mid: r.lambda1.midpoint_f64(),
            l_w: width_f64(&r.lambda1),
            q_mid: r.q1.midpoint_f64(),
            q_w: width_f64(&r.q1),
        }
    }
}

/// Bounds on an absolute gap: exact point for integer indices, midpoint plus
/// margin for spectral enclosures.
fn gap_bounds(mid_i: f64, mid_j: f64, margin: f64) -> (f64, f64) {
    let g = (mid_i - mid_j).abs();
    ((g - margin).max(0.0), g + margin)
}

enum FastOutcome {
    Counterexample,
    Holds,
    TooClose,
}

fn fast_compare(lhs: (f64, f64), rhs: (f64, f64)) -> FastOutcome {
    if lhs.1 < rhs.0 {
        FastOutcome::Counterexample
    } else if lhs.0 >= rhs.1 {
        FastOutcome::Holds
    } else {
        FastOutcome::TooClose
    }
}

/// Exact escalation for one pair and one conjecture. `Ok(true)` means the
/// pair is a certified counterexample.
fn decide_pair_exactly(
    a: &InvariantRecord,
    b: &InvariantRecord,
    c: ConjectureId,
    cfg: &MeasureConfig,
) -> Result<bool> {
    let f2_gap = || {
        Gap::Exact(BigRational::from(BigInt::from(a.f2.abs_diff(b.f2))))
    };
    let out = match c {
        ConjectureId::Cj1 => decide_gap_comparison(
            &Gap::Spectral(&a.charpoly_l, &b.charpoly_l),
            &Gap::Spectral(&a.charpoly_a, &b.charpoly_a),
            cfg,
        )?,
        ConjectureId::Cj2 => decide_gap_comparison(
            &f2_gap(),
            &Gap::Spectral(&a.charpoly_l, &b.charpoly_l),
            cfg,
        )?,
        ConjectureId::Cj3 => decide_gap_comparison(
            &f2_gap(),
            &Gap::Spectral(&a.charpoly_a, &b.charpoly_a),
            cfg,
        )?,
    };
    Ok(out.counterexample)
}

/// Fast-path verdict for one pair and one conjecture.
fn fast_pair(fa: &FastRec, fb: &FastRec, c: ConjectureId) -> FastOutcome {
    let l_gap = || gap_bounds(fa.l_mid, fb.l_mid, fa.l_w + fb.l_w + FP_SLACK);
    let q_gap = || gap_bounds(fa.q_mid, fb.q_mid, fa.q_w + fb.q_w + FP_SLACK);
    let f2_gap = || {
        let g = fa.f2.abs_diff(fb.f2) as f64;
        (g, g)
    };
    match c {
        ConjectureId::Cj1 => fast_compare(q_gap(), l_gap()),
        ConjectureId::Cj2 => fast_compare(f2_gap(), q_gap()),
        ConjectureId::Cj3 => fast_compare(f2_gap(), l_gap()),
    }
}

struct SweepCounts {
    counterexamples: [u64; 3],
    undecidable: u64,
}

fn sweep(
    records: &[InvariantRecord],
    conjectures: &[ConjectureId],
    cfg: &MeasureConfig,
) -> SweepCounts {
    let fast: Vec<FastRec> = records.iter().map(FastRec::new).collect();
    let (counterexamples, undecidable) = (0..records.len())
        .into_par_iter()
        .map(|i| {
            let mut counts = [0u64; 3];
            let mut undecidable = 0u64;
            for j in i + 1..records.len() {
                for &c in conjectures {
                    let outcome = match fast_pair(&fast[i], &fast[j], c) {
                        FastOutcome::Counterexample => Ok(true),
                        FastOutcome::Holds => Ok(false),
                        FastOutcome::TooClose => {
                            decide_pair_exactly(&records[i], &records[j], c, cfg)
                        }
                    };
                    match outcome {
                        Ok(true) => counts[c as usize] += 1,
                        Ok(false) => {}
                        Err(Error::Undecidable(_)) => undecidable += 1,
                        Err(e) => unreachable!("pair decision failed: {e}"),
                    }
                }
            }
            (counts, undecidable)
        })
        .reduce(
            || ([0u64; 3], 0u64),
            |(a, ua), (b, ub)| {
                ([a[0] + b[0], a[1] + b[1], a[2] + b[2]], ua + ub)
            },
        );
    SweepCounts { counterexamples, undecidable }
}

/// Materializes records for all trees on `n` vertices, reusing cached
/// records whose enclosures are at least as tight as requested.
fn records_for_n(
    n: usize,
    cfg: &MeasureConfig,
    store: Option<&mut RecordStore>,
) -> Vec<InvariantRecord> {
    let trees: Vec<TreeGraph> = enumerate_free_trees(n).collect();
    match store {
        None => trees.par_iter().map(|t| compute_invariants(t, cfg)).collect(),
        Some(store) => {
            let keyed: Vec<(CanonicalCode, &TreeGraph)> =
                trees.iter().map(|t| (canonical_code(t), t)).collect();
            let records: Vec<InvariantRecord> = keyed
                .par_iter()
                .map(|(code, t)| match store.get(n, code) {
                    Some(r)
                        if r.lambda1.width() <= cfg.root_width
                            && r.q1.width() <= cfg.root_width =>
                    {
                        r.clone()
                    }
                    _ => compute_invariants(t, cfg),
                })
                .collect();
            for r in &records {
                store.insert(r.clone());
            }
            records
        }
    }
}

/// Runs the pair sweep for each `n` in `n_from..=n_to` and returns one row
/// per vertex count. Undecidable pair comparisons are counted, never
/// silently classified.
pub fn survey(
    n_from: usize,
    n_to: usize,
    conjectures: &[ConjectureId],
    cfg: &MeasureConfig,
    mut store: Option<&mut RecordStore>,
) -> Vec<SurveyRow> {
    assert!(4 <= n_from && n_from <= n_to, "survey range must satisfy 4 <= from <= to");
    let mut rows = Vec::with_capacity(n_to - n_from + 1);
    for n in n_from..=n_to {
        let records = records_for_n(n, cfg, store.as_deref_mut());
        let t = records.len() as u64;
        let counts = sweep(&records, conjectures, cfg);
        let mut counterexamples = BTreeMap::new();
        for &c in conjectures {
            counterexamples.insert(c, counts.counterexamples[c as usize]);
        }
        rows.push(SurveyRow {
            n,
            pair_count: t * (t + 1) / 2,
            counterexamples,
            undecidable: counts.undecidable,
        });
    }
    rows
}

/// All counterexample pairs to one conjecture on `n` vertices, as trees, in
/// enumeration order. Intended for witness extraction at small `n`.
pub fn counterexample_pairs(
    n: usize,
    c: ConjectureId,
    cfg: &MeasureConfig,
) -> Result<Vec<(TreeGraph, TreeGraph)>> {
    let trees: Vec<TreeGraph> = enumerate_free_trees(n).collect();
    let records: Vec<InvariantRecord> =
        trees.par_iter().map(|t| compute_invariants(t, cfg)).collect();
    let fast: Vec<FastRec> = records.iter().map(FastRec::new).collect();
    let mut out = Vec::new();
    for i in 0..records.len() {
        for j in i + 1..records.len() {
            let is_cx = match fast_pair(&fast[i], &fast[j], c) {
                FastOutcome::Counterexample => true,
                FastOutcome::Holds => false,
                FastOutcome::TooClose => decide_pair_exactly(&records[i], &records[j], c, cfg)?,
            };
            if is_cx {
                out.push((trees[i].clone(), trees[j].clone()));
            }
        }
    }
    Ok(out)
}

/// Pairs (by enumeration index) whose floating-point fast path could not
/// separate the two gaps, i.e. the pairs that went through the exact
/// escalation protocol. Useful when auditing counts against external tables.
pub fn near_tie_pairs(
    n: usize,
    c: ConjectureId,
    cfg: &MeasureConfig,
) -> Vec<(usize, usize)> {
    let trees: Vec<TreeGraph> = enumerate_free_trees(n).collect();
    let records: Vec<InvariantRecord> =
        trees.par_iter().map(|t| compute_invariants(t, cfg)).collect();
    let fast: Vec<FastRec> = records.iter().map(FastRec::new).collect();
    let mut out = Vec::new();
    for i in 0..records.len() {
        for j in i + 1..records.len() {
            if matches!(fast_pair(&fast[i], &fast[j], c), FastOutcome::TooClose) {
                out.push((i, j));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// cache
// ---------------------------------------------------------------------------

const CACHE_VERSION: u32 = 1;

/// In-memory invariant cache keyed by `(n, canonical code)`.
#[derive(Debug, Default)]
pub struct RecordStore {
    records: BTreeMap<(usize, CanonicalCode), InvariantRecord>,
}

impl RecordStore {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: usize, code: &CanonicalCode) -> Option<&InvariantRecord> {
        self.records.get(&(n, code.clone()))
    }

    pub fn insert(&mut self, record: InvariantRecord) {
        self.records.insert((record.n, record.code.clone()), record);
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &InvariantRecord> {
        self.records.values()
    }
}

#[derive(Serialize, Deserialize)]
struct CacheHeader {
    version: u32,
}

#[derive(Serialize, Deserialize)]
struct CacheRecord {
    n: usize,
    code: Vec<u32>,
    f2: u64,
    lambda1: [String; 2],
    q1: [String; 2],
    charpoly_a: Vec<String>,
    charpoly_l: Vec<String>,
}

fn enclosure_to_strings(e: &RootEnclosure) -> [String; 2] {
    [e.lo().to_string(), e.hi().to_string()]
}

fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    s.parse::<BigRational>().map_err(|e| format!("bad rational '{s}': {e}"))
}

fn parse_coeffs(strings: &[String]) -> std::result::Result<Vec<BigInt>, String> {
    strings
        .iter()
        .map(|s| s.parse::<BigInt>().map_err(|e| format!("bad coefficient '{s}': {e}")))
        .collect()
}

impl CacheRecord {
    fn from_record(r: &InvariantRecord) -> Self {
        CacheRecord {
            n: r.n,
            code: r.code.levels().to_vec(),
            f2: r.f2,
            lambda1: enclosure_to_strings(&r.lambda1),
            q1: enclosure_to_strings(&r.q1),
            charpoly_a: r.charpoly_a.coeffs().iter().map(|c| c.to_string()).collect(),
            charpoly_l: r.charpoly_l.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    fn into_record(self) -> std::result::Result<InvariantRecord, String> {
        if self.code.len() != self.n {
            return Err(format!("code length {} != n {}", self.code.len(), self.n));
        }
        let tree = crate::canon::tree_from_levels(&self.code).map_err(|e| e.to_string())?;
        let code = canonical_code(&tree);
        if code.levels() != self.code.as_slice() {
            return Err("code is not canonical".into());
        }
        let enclosure = |lohi: &[String; 2]| -> std::result::Result<RootEnclosure, String> {
            let lo = parse_rational(&lohi[0])?;
            let hi = parse_rational(&lohi[1])?;
            if lo > hi {
                return Err("enclosure with lo > hi".into());
            }
            Ok(RootEnclosure::from_endpoints(lo, hi))
        };
        let poly = |kind: MatrixKind,
                    coeffs: &[String]|
         -> std::result::Result<CharPoly, String> {
            let coeffs = parse_coeffs(coeffs)?;
            if coeffs.len() != self.n + 1 || !coeffs.last().is_some_and(One::is_one) {
                return Err("characteristic polynomial is not monic of degree n".into());
            }
            Ok(CharPoly::from_parts(kind, IntPoly::new(coeffs)))
        };
        Ok(InvariantRecord {
            n: self.n,
            f2: self.f2,
            lambda1: enclosure(&self.lambda1)?,
            q1: enclosure(&self.q1)?,
            charpoly_a: poly(MatrixKind::Adjacency, &self.charpoly_a)?,
            charpoly_l: poly(MatrixKind::Laplacian, &self.charpoly_l)?,
            code,
        })
    }
}

/// Loads a JSON-lines invariant cache.
pub fn load_cache(path: &Path) -> Result<RecordStore> {
    let file = std::fs::File::open(path)?;
    let mut lines = std::io::BufReader::new(file).lines();
    let header_line = lines
        .next()
        .ok_or_else(|| Error::CorruptRecord { line: 1, msg: "missing header".into() })??;
    let header: CacheHeader = serde_json::from_str(&header_line)
        .map_err(|e| Error::CorruptRecord { line: 1, msg: e.to_string() })?;
    if header.version != CACHE_VERSION {
        return Err(Error::CacheVersionMismatch {
            found: header.version,
            expected: CACHE_VERSION,
        });
    }
    let mut store = RecordStore::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let lineno = i + 2;
        let cached: CacheRecord = serde_json::from_str(&line)
            .map_err(|e| Error::CorruptRecord { line: lineno, msg: e.to_string() })?;
        let record = cached
            .into_record()
            .map_err(|msg| Error::CorruptRecord { line: lineno, msg })?;
        store.insert(record);
    }
    Ok(store)
}

/// Writes the cache deterministically (records sorted by key).
pub fn store_cache(path: &Path, store: &RecordStore) -> Result<()> {
    let mut out = std::io::BufWriter::new(std::fs::File::create(path)?);
    serde_json::to_writer(&mut out, &CacheHeader { version: CACHE_VERSION })
        .map_err(std::io::Error::other)?;
    out.write_all(b"\n")?;
    for record in store.records.values() {
        serde_json::to_writer(&mut out, &CacheRecord::from_record(record))
            .map_err(std::io::Error::other)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// table emission
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Json,
    Markdown,
}

impl std::str::FromStr for TableFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "json" => Ok(TableFormat::Json),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            other => Err(Error::UnknownFormat(other.into())),
        }
    }
}

fn conjecture_columns(rows: &[SurveyRow]) -> Vec<ConjectureId> {
    let mut cols: Vec<ConjectureId> = rows
        .iter()
        .flat_map(|r| r.counterexamples.keys().copied())
        .collect();
    cols.sort_unstable();
    cols.dedup();
    cols
}

/// Renders survey rows as csv, json, or a markdown table.
///
/// The markdown layout mirrors the three-column survey tables (n, pair
/// count, one counterexample column per conjecture); an `undecidable`
/// column appears only when some row has undecidable pairs. The csv and
/// json forms always carry every field.
pub fn emit_table(rows: &[SurveyRow], format: TableFormat) -> String {
    match format {
        TableFormat::Json => {
            let mut s = serde_json::to_string(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        TableFormat::Csv => {
            let cols = conjecture_columns(rows);
            let mut s = String::from("n,tree_pairs");
            for c in &cols {
                s.push_str(&format!(",{c}"));
            }
            s.push_str(",undecidable\n");
            for r in rows {
                s.push_str(&format!("{},{}", r.n, r.pair_count));
                for c in &cols {
                    s.push_str(&format!(",{}", r.counterexamples.get(c).copied().unwrap_or(0)));
                }
                s.push_str(&format!(",{}\n", r.undecidable));
            }
            s
        }
        TableFormat::Markdown => {
            let cols = conjecture_columns(rows);
            let show_undecidable = rows.iter().any(|r| r.undecidable > 0);
            let mut header = String::from("| n | tree pairs |");
            for c in &cols {
                header.push_str(&format!(" {c} counterexamples |"));
            }
            if show_undecidable {
                header.push_str(" undecidable |");
            }
            let ncols = 2 + cols.len() + usize::from(show_undecidable);
            let mut s = header;
            s.push('\n');
            s.push_str(&format!("|{}\n", " ---: |".repeat(ncols)));
            for r in rows {
                s.push_str(&format!("| {} | {} |", r.n, r.pair_count));
                for c in &cols {
                    s.push_str(&format!(
                        " {} |",
                        r.counterexamples.get(c).copied().unwrap_or(0)
                    ));
                }
                if show_undecidable {
                    s.push_str(&format!(" {} |", r.undecidable));
                }
                s.push('\n');
            }
            s
        }
    }
}
