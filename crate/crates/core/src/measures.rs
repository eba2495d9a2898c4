//! Degree-power indices, the gap-to-distance transform, and certified
//! verdicts for the three distance-measure inequalities.
//!
//! A pair (T, T') is a counterexample to `d_X >= d_Y` exactly when
//! `|X(T) - X(T')| < |Y(T) - Y(T')|` strictly: the distance transform is
//! strictly increasing in the absolute gap for every sigma, so sigma can
//! never change a verdict. Gaps of integer indices are compared exactly;
//! spectral gaps are compared through certified enclosures, with exact
//! zero-gap certificates (cospectrality, or a shared largest root of the
//! polynomial gcd) breaking ties before any refinement, then enclosure
//! widths halving down to a hard floor of 1e-30. A pair that is still
//! unresolved at the floor is reported as undecidable rather than guessed.

use crate::error::{Error, Result};
use crate::graph::TreeGraph;
use crate::poly::rational_from_decimal_str;
use crate::spectra::{
    char_poly, largest_root, largest_roots_equal, CharPoly, MatrixKind,
    default_root_width,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Knobs shared by the measures and survey layers.
#[derive(Debug, Clone)]
pub struct MeasureConfig {
    pub sigma: f64,
    pub root_width: BigRational,
}

impl MeasureConfig {
    pub fn new(sigma: f64, root_width: BigRational) -> Result<Self> {
        if !(sigma > 0.0) {
            return Err(Error::NonPositiveSigma(sigma));
        }
        assert!(root_width > BigRational::zero(), "root width must be positive");
        Ok(MeasureConfig { sigma, root_width })
    }
}

impl Default for MeasureConfig {
    fn default() -> Self {
        MeasureConfig { sigma: 1.0, root_width: default_root_width() }
    }
}

/// The three claimed inequalities between distance measures on trees.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(rename_all = "lowercase")]
pub enum ConjectureId {
    /// d_q1 >= d_lambda1
    Cj1,
    /// d_F2 >= d_q1
    Cj2,
    /// d_F2 >= d_lambda1
    Cj3,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 3] = [ConjectureId::Cj1, ConjectureId::Cj2, ConjectureId::Cj3];
}

impl std::fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConjectureId::Cj1 => write!(f, "cj1"),
            ConjectureId::Cj2 => write!(f, "cj2"),
            ConjectureId::Cj3 => write!(f, "cj3"),
        }
    }
}

impl std::str::FromStr for ConjectureId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cj1" => Ok(ConjectureId::Cj1),
            "cj2" => Ok(ConjectureId::Cj2),
            "cj3" => Ok(ConjectureId::Cj3),
            other => Err(Error::UnknownFormat(format!("conjecture '{other}'"))),
        }
    }
}

/// Certified enclosure of an absolute invariant gap. Exact values are point
/// enclosures (`lo == hi`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapEnclosure {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl GapEnclosure {
    fn point(x: BigRational) -> Self {
        GapEnclosure { lo: x.clone(), hi: x }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from(BigInt::from(2)))
            .to_f64()
            .expect("gap fits in f64")
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64().expect("gap fits in f64")
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64().expect("gap fits in f64")
    }
}

/// Outcome of comparing one conjectured inequality on one pair.
#[derive(Debug, Clone)]
pub struct PairVerdict {
    /// True iff the inequality holds for this pair (ties included).
    pub holds: bool,
    /// Gap of the claimed-larger measure (left side of `d_X >= d_Y`).
    pub lhs_gap: GapEnclosure,
    /// Gap of the claimed-smaller measure.
    pub rhs_gap: GapEnclosure,
    /// True when both gaps were pinned to exact values (integer gaps or
    /// certified zero spectral gaps) rather than separated as intervals.
    pub decided_exactly: bool,
}

/// Sum of the k-th powers of the vertex degrees, exact.
pub fn degree_power(t: &TreeGraph, k: u32) -> BigInt {
    (0..t.n())
        .map(|v| num_traits::pow(BigInt::from(t.degree(v)), k as usize))
        .sum()
}

/// The distance transform `1 - exp(-((a - b) / sigma)^2)`.
pub fn distance(a: f64, b: f64, sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) {
        return Err(Error::NonPositiveSigma(sigma));
    }
    let z = (a - b) / sigma;
    Ok(-(-z * z).exp_m1())
}

/// One side of a gap comparison.
pub(crate) enum Gap<'a> {
    /// Exactly known gap (degree-power indices).
    Exact(BigRational),
    /// |largest root of p1 - largest root of p2|, known through enclosures.
    Spectral(&'a CharPoly, &'a CharPoly),
}

impl Gap<'_> {
    fn enclosure(&self, width: &BigRational) -> GapEnclosure {
        match self {
            Gap::Exact(v) => GapEnclosure::point(v.clone()),
            Gap::Spectral(p1, p2) => {
                let e1 = largest_root(p1, width);
                let e2 = largest_root(p2, width);
                let lo = e1.lo() - e2.hi();
                let hi = e1.hi() - e2.lo();
                if lo > BigRational::zero() {
                    GapEnclosure { lo, hi }
                } else if hi < BigRational::zero() {
                    GapEnclosure { lo: -hi, hi: -lo }
                } else {
                    GapEnclosure { lo: BigRational::zero(), hi: hi.max(-lo) }
                }
            }
        }
    }

    /// Certifies whether a spectral gap is exactly zero: identical
    /// polynomials, or a shared largest root of the gcd.
    fn certified_zero(&self) -> bool {
        match self {
            Gap::Exact(v) => v.is_zero(),
            Gap::Spectral(p1, p2) => {
                p1.coeffs() == p2.coeffs() || largest_roots_equal(p1, p2)
            }
        }
    }
}

/// Hard floor for enclosure refinement, 1e-30.
fn refinement_floor() -> BigRational {
    rational_from_decimal_str("1e-30").expect("literal parses")
}

pub(crate) struct Decision {
    pub counterexample: bool,
    pub lhs: GapEnclosure,
    pub rhs: GapEnclosure,
    pub decided_exactly: bool,
}

/// Certified comparison: is `lhs < rhs` strictly? Ties and certified
/// `lhs >= rhs` both mean the inequality holds.
pub(crate) fn decide_gap_comparison(
    lhs: &Gap<'_>,
    rhs: &Gap<'_>,
    cfg: &MeasureConfig,
) -> Result<Decision> {
    let mut width = cfg.root_width.clone();
    let floor = refinement_floor();
    let two = BigRational::from(BigInt::from(2));
    // once certified exactly zero, a side stays pinned at the point [0, 0]
    let mut lhs_zero = false;
    let mut rhs_zero = false;
    let mut certificates_tried = false;
    loop {
        let le = if lhs_zero {
            GapEnclosure::point(BigRational::zero())
        } else {
            lhs.enclosure(&width)
        };
        let re = if rhs_zero {
            GapEnclosure::point(BigRational::zero())
        } else {
            rhs.enclosure(&width)
        };
        if le.hi < re.lo {
            let exact = le.is_exact() && re.is_exact();
            return Ok(Decision { counterexample: true, lhs: le, rhs: re, decided_exactly: exact });
        }
        if le.lo >= re.hi {
            let exact = le.is_exact() && re.is_exact();
            return Ok(Decision { counterexample: false, lhs: le, rhs: re, decided_exactly: exact });
        }
        if le.is_exact() && re.is_exact() {
            // overlapping points are equal points: a tie, the inequality holds
            return Ok(Decision { counterexample: false, lhs: le, rhs: re, decided_exactly: true });
        }
        if !certificates_tried {
            certificates_tried = true;
            lhs_zero = lhs.certified_zero();
            rhs_zero = rhs.certified_zero();
            if lhs_zero || rhs_zero {
                continue; // re-compare with pinned sides before refining
            }
        }
        width /= &two;
        if width < floor {
            return Err(Error::Undecidable(format!(
                "gap enclosures [{}, {}] and [{}, {}] still overlap at width 1e-30",
                le.lo, le.hi, re.lo, re.hi
            )));
        }
    }
}

fn abs_gap(a: &BigInt, b: &BigInt) -> BigRational {
    BigRational::from((a - b).abs())
}

/// Certified verdict for one conjectured inequality on one tree pair.
pub fn conjecture_verdict(
    t1: &TreeGraph,
    t2: &TreeGraph,
    c: ConjectureId,
    cfg: &MeasureConfig,
) -> Result<PairVerdict> {
    if t1.n() != t2.n() {
        return Err(Error::SizeMismatch { left: t1.n(), right: t2.n() });
    }
    let f2_gap = || abs_gap(&degree_power(t1, 2), &degree_power(t2, 2));
    let adjacency =
        || (char_poly(t1, MatrixKind::Adjacency), char_poly(t2, MatrixKind::Adjacency));
    let laplacian =
        || (char_poly(t1, MatrixKind::Laplacian), char_poly(t2, MatrixKind::Laplacian));
    let decision = match c {
        ConjectureId::Cj1 => {
            let (la1, la2) = adjacency();
            let (lp1, lp2) = laplacian();
            decide_gap_comparison(
                &Gap::Spectral(&lp1, &lp2),
                &Gap::Spectral(&la1, &la2),
                cfg,
            )?
        }
        ConjectureId::Cj2 => {
            let (lp1, lp2) = laplacian();
            decide_gap_comparison(&Gap::Exact(f2_gap()), &Gap::Spectral(&lp1, &lp2), cfg)?
        }
        ConjectureId::Cj3 => {
            let (la1, la2) = adjacency();
            decide_gap_comparison(&Gap::Exact(f2_gap()), &Gap::Spectral(&la1, &la2), cfg)?
        }
    };
    Ok(PairVerdict {
        holds: !decision.counterexample,
        lhs_gap: decision.lhs,
        rhs_gap: decision.rhs,
        decided_exactly: decision.decided_exactly,
    })
}
