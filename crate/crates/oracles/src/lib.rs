//! Reference computations for tests. Nothing here calls into `hartmann-core`;
//! each routine takes a different path to the same numbers so that agreement
//! means something.

pub mod closed_form;
pub mod expansion;
pub mod gamma;
pub mod quadrature;
