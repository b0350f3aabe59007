use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Which object failed the genericity requirement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenericityKind {
    /// The block Vandermonde matrix on the subset is singular.
    Vandermonde,
    /// The quasideterminant `w` for `(A, i)` is singular.
    Quasideterminant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    SingularMatrix,
    DimensionMismatch { expected: (usize, usize), found: (usize, usize) },
    FieldMismatch,
    NotPrime(u64),
    InvalidScalar(String),
    TruncationMismatch { left: usize, right: usize },
    NonUnitConstantTerm,
    NonUnitLeadingCoefficient,
    DivisionByZero,
    /// `subset` uses 1-based root indices; `index` is set for quasideterminant failures.
    GenericityFailure { kind: GenericityKind, subset: Vec<usize>, index: Option<usize> },
    InvalidRoots(String),
    SizeLimit { what: &'static str, size: usize, cap: usize },
    InvalidGraph(String),
    UnknownVertex(String),
    InvalidComplex(String),
    FaceNotInComplex(Vec<u32>),
    NegativeDimension { degree: usize, value: String },
    NonzeroRemainder { remainder: String },
    DegreeMismatch { degree: usize, height: usize },
    NegativeDiscrepancy { degree: usize, value: i64 },
    HypothesisViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::DimensionMismatch { expected, found } => write!(
                f,
                "dimension mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::FieldMismatch => write!(f, "operands live over different fields"),
            Error::NotPrime(p) => write!(f, "{p} is not a prime below 2^31"),
            Error::InvalidScalar(s) => write!(f, "cannot parse scalar {s:?}"),
            Error::TruncationMismatch { left, right } => {
                write!(f, "truncation degrees differ: {left} vs {right}")
            }
            Error::NonUnitConstantTerm => write!(f, "series constant term is not +1 or -1"),
            Error::NonUnitLeadingCoefficient => {
                write!(f, "divisor leading coefficient is not +1 or -1")
            }
            Error::DivisionByZero => write!(f, "division by the zero polynomial"),
            Error::GenericityFailure { kind, subset, index } => {
                let what = match kind {
                    GenericityKind::Vandermonde => "block Vandermonde",
                    GenericityKind::Quasideterminant => "quasideterminant",
                };
                write!(f, "genericity failure: {what} singular on subset {subset:?}")?;
                if let Some(i) = index {
                    write!(f, " with index {i}")?;
                }
                Ok(())
            }
            Error::InvalidRoots(s) => write!(f, "invalid root system: {s}"),
            Error::SizeLimit { what, size, cap } => {
                write!(f, "{what} size {size} exceeds cap {cap}")
            }
            Error::InvalidGraph(s) => write!(f, "invalid layered graph: {s}"),
            Error::UnknownVertex(s) => write!(f, "unknown vertex {s:?}"),
            Error::InvalidComplex(s) => write!(f, "invalid simplicial complex: {s}"),
            Error::FaceNotInComplex(face) => write!(f, "{face:?} is not a face of the complex"),
            Error::NegativeDimension { degree, value } => {
                write!(f, "negative graded dimension {value} in degree {degree}")
            }
            Error::NonzeroRemainder { remainder } => {
                write!(f, "inverse Hilbert series is not a polynomial: remainder {remainder}")
            }
            Error::DegreeMismatch { degree, height } => write!(
                f,
                "inverse Hilbert polynomial has degree {degree} but the graph has height {height}"
            ),
            Error::NegativeDiscrepancy { degree, value } => {
                write!(f, "negative discrepancy {value} in degree {degree}")
            }
            Error::HypothesisViolation(s) => write!(f, "hypothesis violated: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
