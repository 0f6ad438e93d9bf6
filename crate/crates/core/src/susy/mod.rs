//! The N=2 super-Poincaré algebra with central charge, its massive
//! little-algebra representation and the quartic extensions built on it.

mod displays;
mod fock;
pub mod lorentz;
mod presentation;

pub use displays::{
    build_quartic_poincare_presentation, family_of, induced_display, quartic_poincare_display,
    rest_frame_display, verify_abstract_quartic_poincare, verify_induced_n2_quartic,
    verify_little_algebra_display, verify_zero_central_charge, DisplayComparison, EvenSlots,
    FamilyOutcome, FAMILIES,
};
pub use fock::{
    bracket_elements, build_little_algebra_rep, fermionic_modes, hermiticity_spot_check,
    oscillator_coefficients, oscillator_substitution, rest_frame_value, transcribed_coefficients,
    DualMode, LittleAlgebraRep, Oscillators, DUALS, OSCILLATORS,
};
pub use presentation::{build_n2_presentation, Charge, CENTRAL, MOMENTA};
