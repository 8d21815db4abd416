use alloc::string::String;

/// Errors raised by the exact algebra and the model constructions on top of it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix of {rows}x{cols} needs {expected} entries, got {found}")]
    BadShape {
        rows: usize,
        cols: usize,
        expected: usize,
        found: usize,
    },
    #[error("substituting `{var}` needs a negative power of a non-monomial")]
    NonInvertibleSubstitution { var: String },
    #[error("negative power of a polynomial that is not a monomial")]
    NotInvertible,
    #[error("operation needs nonnegative exponents")]
    NotPolynomial,
    #[error("matrix is not traceless (trace {trace})")]
    NotTraceless { trace: String },
    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),
    #[error("exp-adjoint series did not terminate: element is not nilpotent")]
    NotNilpotent,
    #[error("{which} has support outside its nilpotent subalgebra")]
    WrongSubalgebra { which: &'static str },
    #[error("diagonal element is not regular (repeated eigenvalue)")]
    NotRegular,
    #[error("base point is not a Weyl translate of Diag(n,-1,...,-1)")]
    NotMinimalOrbitBase,
    #[error("ad(H0) cannot be rescaled to have eigenvalues in {{0, 1, -1}}")]
    EigenvalueOutOfRange,
    #[error("moment polygons need lattice rank 2, got {0}")]
    RankUnsupported(usize),
    #[error("a moment polygon needs at least two normals with matching offsets")]
    InsufficientConstraints,
    #[error("zero normal vector in row {0}")]
    ZeroNormal(usize),
    #[error("unknown chart `{0}`")]
    UnknownChart(String),
    #[error("bi-projective point has an identically zero factor")]
    DegeneratePoint,
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("critical locus is degenerate for these coefficients")]
    DegenerateCoefficients,
    #[error("invalid coefficients: {0}")]
    InvalidCoefficients(&'static str),
    #[error("variable `{0}` is reserved for the family parameter")]
    ParameterClash(String),
    #[error("dimension must be at least 1")]
    EmptyDimension,
}

pub type Result<T> = core::result::Result<T, Error>;
