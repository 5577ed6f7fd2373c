use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(u64, u64),
    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),
    #[error("invalid format: {0}")]
    InvalidFormat(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("permutation length {0} exceeds the bound {1}")]
    LengthBound(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no stabilization up to n = {0}")]
    Unstable(usize),
    #[error("matrix is not Hermitian (deviation {0:e})")]
    NonHermitian(f64),
    #[error("malformed linear program: {0}")]
    MalformedLp(String),
}

pub type Result<T> = std::result::Result<T, Error>;
