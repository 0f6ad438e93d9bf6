//! Exact engine for Lie superalgebras, Lie algebras of order four and their
//! matrix representations.

pub mod algebra;
pub mod clifford;
pub mod error;
pub mod matrix;
pub mod report;
pub mod scalar;
pub mod spinor;
pub mod susy;

pub use algebra::{
    AlgebraKind, AlgebraPresentation, Element, EvenQuadratic, Grade, Representation,
};
pub use clifford::{LinearForm, PolynomialTarget};
pub use error::{Error, Result};
pub use matrix::Matrix;
pub use report::{Failure, LedgerEntry, VerificationReport};
pub use scalar::{Bindings, GaussianRational, Scalar, Symbol};
