//! Presentations of Lie superalgebras and Lie algebras of order four, their
//! matrix representations, and the identity checks between the two.

mod bracket;
mod induce;
mod jacobi;
mod presentation;
mod rep;

pub use bracket::{four_bracket_nested, four_bracket_sym, graded_bracket};
pub use induce::{
    classify, component, fold_ratios, induce_quartic, nested_quartic, quartic_cross_report,
    transcribed_quartic, Component, FamilyRatio, Observation, QuarticFamily,
};
pub use jacobi::{
    check_equivariance, check_generalized_jacobi, check_generalized_jacobi_tables,
    check_quartic_transfer, check_super_jacobi, check_super_jacobi_tables, multisets,
    quartic_multilinear,
};
pub use presentation::{
    multiset_key, AlgebraKind, AlgebraPresentation, Element, EvenQuadratic, GenIdx, GeneratorId,
    Grade, Parity, PresentationBuilder, StructureTables,
};
pub use rep::{evaluate_element, evaluate_even_quadratic, Representation};
