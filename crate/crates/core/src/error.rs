use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped by the layer that raises them; [`Error::kind`] sorts
/// them into parse/config problems, mathematical domain errors and internal
/// invariant breaches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // coefficient arithmetic
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),

    // polynomials and orderings
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomials or ideals live in different rings")]
    RingMismatch,
    #[error("invalid term ordering: {0}")]
    InvalidOrdering(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("linear shift is not invertible: zero scale for {0}")]
    NonInvertibleShift(String),

    // ideals
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("colon by the zero ideal")]
    ZeroIdealDivisor,
    #[error("operation undefined on the zero ideal")]
    ZeroIdeal,

    // fans
    #[error("marking is not realised by any strictly positive weight")]
    InconsistentMarking,
    #[error("unsupported ideal class: {0}")]
    UnsupportedIdealClass(String),
    #[error("multiplicity {found} exceeds the configured bound {bound}")]
    BoundExceeded { bound: usize, found: usize },

    // points, grids, distractions
    #[error("empty point set")]
    EmptyPointSet,
    #[error("duplicate point {0}")]
    DuplicatePoint(String),
    #[error("repeated root {0} for variable {1}")]
    RepeatedRoot(String, String),
    #[error("order ideal is infinite (no pure power of {0})")]
    InfiniteOrderIdeal(String),
    #[error("characteristic {characteristic} too small: need {needed} distinct naturals")]
    CharacteristicTooSmall { characteristic: u32, needed: u32 },
    #[error("distraction tuple for {var} has {len} entries, needs {needed}")]
    SpecTooShort { var: String, len: usize, needed: usize },
    #[error("repeated constant {0} in distraction tuple for {1}")]
    RepeatedConstant(String, String),
    #[error("ideal does not contain the grid ideal")]
    NotContaining,
    #[error("complementarity certificate failed: {0}")]
    ComplementarityCertificateFailed(String),
    #[error("subset is not contained in the grid")]
    NotSubset,
    #[error("point set is not a full grid")]
    NotGrid,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("field equations need a finite field")]
    RationalsNotFinite,
    #[error("supplied factors do not match the grid generator for {0}: {1}")]
    FactorProductMismatch(String, String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Domain,
    Internal,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Parse(_) | Error::InvalidOrdering(_) | Error::NotPrime(_) => ErrorKind::Parse,
            Error::Internal(_) => ErrorKind::Internal,
            _ => ErrorKind::Domain,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
