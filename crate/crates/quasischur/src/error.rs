use thiserror::Error;

/// Errors surfaced by fallible library operations.
///
/// Contract violations (e.g. comparing partitions of different sizes in
/// dominance order) are panics, not errors; this enum covers conditions a
/// caller can legitimately trigger with well-formed but unsuitable input.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid composition: {0}")]
    InvalidComposition(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not standard")]
    NotStandard,

    #[error("partition {partition} does not fit in the {w}x{h} box")]
    OutsideBox { partition: String, w: u32, h: u32 },

    #[error("partition {partition} lies outside the stratum {stratum}")]
    OutsideStratum { partition: String, stratum: &'static str },

    #[error("input is not a symmetric function")]
    NotSymmetric,

    #[error("round-trip verification failed: {0}")]
    RoundTripFailed(String),

    #[error("matrix is not unit upper-triangular")]
    NotUnitriangular,

    #[error("word is not a permutation of 1..=n")]
    NotPermutation,

    #[error("size {size} exceeds the size guard {guard}")]
    SizeGuardExceeded { size: u64, guard: u64 },

    #[error("width {0} is not supported here (need w in {{2,3,4}})")]
    UnsupportedWidth(u32),

    #[error("polynomial is not symmetric in x and y")]
    AsymmetricPolynomial,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("cross-check disagreement: {0}")]
    CrossCheck(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
