#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod complex;
pub mod corpus;
pub mod dual;
pub mod error;
pub mod field;
pub mod graph;
pub mod linalg;
pub mod mobius;
pub mod ncfactor;
pub mod series;
pub mod topo;

pub use complex::SimplicialComplex;
pub use dual::{GradedDims, KoszulVerdict, QuadraticPresentation};
pub use error::{Error, GenericityKind, Result};
pub use field::{FieldSpec, Scalar};
pub use graph::{LayeredGraph, ValidationReport, Violation};
pub use linalg::DenseMatrix;
pub use mobius::{MobiusConvention, MobiusTable, PosetClosure};
pub use ncfactor::{MatrixPolynomial, MatrixRingElement, PseudoRootTable, RootSystem};
pub use series::{IntPolynomial, TruncatedSeries};
pub use topo::{BettiVector, Convention};
