//! Numerical thresholds shared by the analytic engine, the finite-difference
//! oracle and the validation suite.

/// Relative threshold below which quasi-polynomial coefficients are dropped.
pub const COEFF_TRIM: f64 = 1e-14;

/// Relative mismatch allowed when checking that two decay rates agree.
pub const KAPPA_MATCH: f64 = 1e-12;

/// Allowed distance of an exponent offset from the nearest integer.
pub const EXPONENT_INTEGRALITY: f64 = 1e-12;

/// Allowed distance of a radial or angular node index from an integer.
pub const QUANTUM_INTEGRALITY: f64 = 1e-9;

/// Exact-identity checks (Riccati expansion, annihilation of ground states).
pub const EXACT_IDENTITY: f64 = 1e-12;

/// Factorization `A+A- = H + const` and block-algebra residuals.
pub const FACTORIZATION: f64 = 1e-10;

/// Orthonormality of analytic states through Gamma integrals.
pub const ORTHONORMALITY: f64 = 1e-10;

/// Eigen-residual of states produced by raising chains.
pub const EIGEN_RESIDUAL: f64 = 1e-9;

/// Partner intertwining residual.
pub const INTERTWINING: f64 = 1e-8;

/// Hydrogen-limit agreement with the Laguerre oracle.
pub const HYDROGEN_LIMIT: f64 = 1e-10;

/// Floor of the finite-difference eigenvalue tolerance `max(floor, 5 h^2 |E|)`.
pub const FD_EIGENVALUE_FLOOR: f64 = 1e-4;

/// Multiplier of `h^2 |E|` in the finite-difference eigenvalue tolerance.
pub const FD_EIGENVALUE_H2: f64 = 5.0;

/// Max-norm agreement of an inverse-iteration eigenvector with the analytic state.
pub const FD_EIGENVECTOR: f64 = 1e-3;

/// Relative residual `|Tu - lu| / |u|` required from inverse iteration.
pub const EIGENVECTOR_RESIDUAL: f64 = 1e-6;

/// Max-norm agreement of the integrated ground-state ODE with the analytic state.
pub const ODE_GROUND_STATE: f64 = 1e-6;

/// Pivot magnitude substituted for vanishing LDL^T pivots in Sturm counts.
pub const STURM_PIVOT_GUARD: f64 = 1e-300;

/// Bisection iteration cap per eigenvalue.
pub const BISECTION_MAX_ITER: usize = 200;

/// Finite-difference tolerance for an eigenvalue `energy` on a grid of spacing `h`.
pub fn fd_eigenvalue_tolerance(h: f64, energy: f64) -> f64 {
    FD_EIGENVALUE_FLOOR.max(FD_EIGENVALUE_H2 * h * h * energy.abs())
}
