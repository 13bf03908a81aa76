use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qudit dimension mismatch: {0} vs {1}")]
    DimensionMismatch(u64, u64),
    #[error("site count mismatch: {0} vs {1}")]
    SiteCountMismatch(usize, usize),
    #[error("qudit dimension must be at least 2, got {0}")]
    BadDimension(u64),
    #[error("generating set is not abelian: generators {0} and {1} do not commute")]
    NonAbelian(usize, usize),
    #[error("invalid stabilizer group: {0}")]
    InvalidStabilizer(String),
    #[error("code failed validation: {0}")]
    InvalidCode(String),
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("syndrome target has no solution over Z_{0}")]
    UnsolvableSyndrome(u64),
    #[error("code is not CSS: {0}")]
    NotCss(String),
    #[error("classical code length mismatch: expected {expected}, got {got}")]
    ClassicalLength { expected: usize, got: usize },
    #[error("unknown classical code '{0}' (registry knows rep<k> and hamming743)")]
    UnknownClassicalCode(String),
    #[error("dense dimension {0} exceeds cap {1} (set HYBRIDSTAB_DENSE_CAP to raise)")]
    DenseCapExceeded(u64, u64),
    #[error("oracle refusal: subsystem structure check failed, dense verdict would be unreliable")]
    OracleRefusal,
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
