use thiserror::Error;

/// Errors surfaced by tree construction, codecs, measures, and the survey.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("vertex index {index} out of range for n = {n}")]
    BadIndex { index: usize, n: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("vertex count mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("sigma must be positive, got {0}")]
    NonPositiveSigma(f64),
    #[error("comparison undecidable at the precision floor: {0}")]
    Undecidable(String),
    #[error("seed trees are not cospectrally rooted for the requested matrix kind")]
    NotCospectrallyRooted,
    #[error("certification failure: coalesced pair is not cospectral ({0})")]
    CertificationFailure(String),
    #[error("cache version mismatch: found {found}, expected {expected}")]
    CacheVersionMismatch { found: u32, expected: u32 },
    #[error("corrupt cache record at line {line}: {msg}")]
    CorruptRecord { line: usize, msg: String },
    #[error("unknown output format: {0}")]
    UnknownFormat(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
