//! Supersymmetric solution of the ring-shaped Hartmann potential.
//!
//! The radial problem reduces to a Coulomb-type Hamiltonian with a real
//! angular constant `L`. [`susy`] factorizes it with the superpotential
//! `W_L = −(L+1)/r + γ/(L+1)`, generates every bound state by raising chains
//! in the exact [`quasipoly`] algebra, and checks the structural identities.
//! [`model`] maps the physical parameters `(η, σ, m, ν', n')` onto the radial
//! labels, and [`numeric`] is an independent finite-difference oracle.

pub mod error;
pub mod gamma;
pub mod model;
pub mod numeric;
pub mod quasipoly;
pub mod susy;
pub mod tolerances;
pub mod validation;

pub use error::{Error, Result};
pub use gamma::{gamma_real, ln_gamma};
pub use model::{
    degeneracy_at_level, derive_quantum_numbers, hydrogen_limit_check, potential_value,
    radial_wavefunction, spectrum, HartmannParams, QuantumNumbers, RadialSolution, SpectrumEntry,
    UnitSystem,
};
pub use numeric::{RadialGrid, TridiagonalOperator};
pub use quasipoly::QuasiPolynomial;
pub use susy::{
    build_u, energy_internal, ground_state_u, partner_potentials, radial_r, LadderOperator,
    RadialPotentialCoeffs, Superpotential,
};
