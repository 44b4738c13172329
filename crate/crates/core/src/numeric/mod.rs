//! Finite-difference oracle for `H_L`, independent of the ladder algebra.
//!
//! `H_L` is discretized with the second-order central stencil on a uniform
//! grid with Dirichlet ends, giving a symmetric tridiagonal matrix whose
//! lowest eigenvalues come from Sturm-count bisection and whose eigenvectors
//! come from inverse iteration.

mod grid;
mod spectral;
mod tridiag;

pub use grid::RadialGrid;
pub use spectral::{
    integrate_ground_state_ode, verify_isospectrality, IsospectralityReport, LevelDeviation,
};
pub use tridiag::{discretize, eigenvector, lowest_eigenvalues, sturm_count, TridiagonalOperator};
