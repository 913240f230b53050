use thiserror::Error;

/// Errors produced by parsers, spec constructors and checkers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid digit '{digit}' for base {base}")]
    InvalidDigit { digit: char, base: u8 },
    #[error("malformed coordinate '{0}'")]
    MalformedCoordinate(String),
    #[error("coordinate '{0}' is outside [0,1); points with a coordinate equal to 1 are not comparable")]
    CoordinateOutOfRange(String),
    #[error("negative coordinates are not supported here")]
    NegativeCoordinate,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("base mismatch")]
    BaseMismatch,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("composed curves require an even dimension, got {0}")]
    OddDimension(usize),
    #[error("index {index} out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid curve definition: {0}")]
    InvalidSpec(String),
    #[error("gate does not contract to a corner: {0}")]
    GateNotCorner(String),
    #[error("expansion of {cells} cells exceeds the resource guard ({limit})")]
    DepthTooLarge { cells: u128, limit: u128 },
    #[error("unsupported segment: only unit-square edges and the ascending diagonal are checkable")]
    UnsupportedSegment,
    #[error("symmetry witness rejected: {0}")]
    SymmetryWitness(String),
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
