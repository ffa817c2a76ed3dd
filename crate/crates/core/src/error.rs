use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CdpError {
    #[error("invalid degree {0}: permutations need at least one point")]
    InvalidDegree(usize),

    #[error("not a permutation: {0}")]
    NotBijective(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed cycle notation: {0}")]
    MalformedCycles(String),

    #[error("symbol {symbol} is outside the ground set of size {n}")]
    OutOfRange { symbol: usize, n: usize },

    #[error("permutations {a} and {b} agree at point {point}")]
    NotCdp { a: usize, b: usize, point: usize },

    #[error("a maximal set of degree {n} needs {n} permutations, found {found}")]
    NotMaximal { n: usize, found: usize },

    #[error("set is not in canonical order (sigma_i(0) = i)")]
    NotCanonical,

    #[error("the identity is not an element of the set")]
    MissingIdentity,

    #[error("conjugated matrix set is not abelian")]
    NotAbelianizable,

    #[error("not a group table: {0}")]
    NotAGroup(String),

    #[error("enumeration of degree {n} exceeds the configured bound {bound}")]
    EnumerationBound { n: usize, bound: usize },

    #[error("index {index} out of range for degree {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("matrix of size {0} is not a bipartite n^2 x n^2 operator")]
    NonSquareStructure(usize),

    #[error("entry ({row}, {col}) lies outside the support of the CDP set")]
    NotCdpStructured { row: usize, col: usize },

    #[error("coefficient matrix {0} is not Hermitian")]
    NotHermitian(usize),

    #[error("theorem requires an abelian CDP set")]
    TheoremInapplicable,

    #[error("majorisation needs equal totals, got {lhs} and {rhs}")]
    NotComparableTotals { lhs: f64, rhs: f64 },

    #[error("operator has zero trace and cannot be normalized")]
    ZeroTrace,

    #[error("invalid pairing: {0}")]
    InvalidPairing(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, CdpError>;

impl CdpError {
    /// Short machine-readable tag, used for structured error output.
    pub fn kind(&self) -> &'static str {
        match self {
            CdpError::InvalidDegree(_) => "invalid-degree",
            CdpError::NotBijective(_) => "not-bijective",
            CdpError::DimensionMismatch { .. } => "dimension-error",
            CdpError::MalformedCycles(_) => "malformed-cycles",
            CdpError::OutOfRange { .. } => "out-of-range",
            CdpError::NotCdp { .. } => "not-cdp",
            CdpError::NotMaximal { .. } => "not-maximal",
            CdpError::NotCanonical => "not-canonical",
            CdpError::MissingIdentity => "missing-identity",
            CdpError::NotAbelianizable => "not-abelianizable",
            CdpError::NotAGroup(_) => "not-a-group",
            CdpError::EnumerationBound { .. } => "enumeration-bound",
            CdpError::IndexOutOfRange { .. } => "out-of-range",
            CdpError::NonSquareStructure(_) => "non-square-structure",
            CdpError::NotCdpStructured { .. } => "not-cdp-structured",
            CdpError::NotHermitian(_) => "not-hermitian",
            CdpError::TheoremInapplicable => "theorem-inapplicable",
            CdpError::NotComparableTotals { .. } => "not-comparable-totals",
            CdpError::ZeroTrace => "zero-trace",
            CdpError::InvalidPairing(_) => "invalid-pairing",
            CdpError::Unsupported(_) => "unsupported",
            CdpError::Parse(_) => "parse-error",
        }
    }
}
