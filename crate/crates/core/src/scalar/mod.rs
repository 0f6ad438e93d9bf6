//! Exact arithmetic: Gaussian rationals and multivariate polynomials over them.

mod gaussian;
mod grammar;
mod poly;

pub use gaussian::GaussianRational;
pub use poly::{Bindings, Monomial, Scalar, Symbol};
