use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tolerances::{BISECTION_MAX_ITER, EIGENVECTOR_RESIDUAL, STURM_PIVOT_GUARD};

use super::RadialGrid;

/// Symmetric tridiagonal matrix. `spacing` is the grid step used for the
/// discrete inner product `h Σ u_i²` (1 for abstract matrices).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TridiagonalOperator {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
    pub spacing: f64,
}

impl TridiagonalOperator {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() || offdiag.len() + 1 != diag.len() {
            return Err(Error::InvalidArgument(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal entries",
                diag.len(),
                offdiag.len()
            )));
        }
        Ok(Self { diag, offdiag, spacing: 1.0 })
    }

    pub fn len(&self) -> usize {
        self.diag.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diag.is_empty()
    }

    /// Gershgorin interval containing the whole spectrum.
    pub fn gershgorin_bounds(&self) -> (f64, f64) {
        let n = self.diag.len();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    pub fn apply(&self, u: &[f64]) -> Vec<f64> {
        let n = self.diag.len();
        (0..n)
            .map(|i| {
                let mut y = self.diag[i] * u[i];
                if i > 0 {
                    y += self.offdiag[i - 1] * u[i - 1];
                }
                if i + 1 < n {
                    y += self.offdiag[i] * u[i + 1];
                }
                y
            })
            .collect()
    }
}

/// Central-difference `H_L`: `diag_i = 1/h² + L(L+1)/(2r_i²) − γ/r_i`,
/// `offdiag = −1/(2h²)`.
pub fn discretize(l: f64, gamma: f64, grid: &RadialGrid) -> Result<TridiagonalOperator> {
    if !(l > -1.0) {
        return Err(Error::Domain(format!("discretization needs L > -1, got {l}")));
    }
    if !(gamma >= 0.0) {
        return Err(Error::Domain(format!("discretization needs gamma >= 0, got {gamma}")));
    }
    let h = grid.spacing();
    let centrifugal = 0.5 * l * (l + 1.0);
    let diag = grid
        .nodes()
        .map(|r| 1.0 / (h * h) + centrifugal / (r * r) - gamma / r)
        .collect();
    let offdiag = vec![-0.5 / (h * h); grid.len() - 1];
    Ok(TridiagonalOperator { diag, offdiag, spacing: h })
}

/// Number of eigenvalues strictly below `lambda` (negative LDLᵀ pivots).
pub fn sturm_count(t: &TridiagonalOperator, lambda: f64) -> usize {
    let mut count = 0;
    let mut pivot = 1.0;
    for i in 0..t.diag.len() {
        let coupling = if i > 0 { t.offdiag[i - 1] * t.offdiag[i - 1] / pivot } else { 0.0 };
        pivot = t.diag[i] - lambda - coupling;
        if pivot.abs() < STURM_PIVOT_GUARD {
            pivot = if pivot < 0.0 { -STURM_PIVOT_GUARD } else { STURM_PIVOT_GUARD };
        }
        if pivot < 0.0 {
            count += 1;
        }
    }
    count
}

/// The `k` smallest eigenvalues, each bisected to a bracket of width `<= tol`.
pub fn lowest_eigenvalues(t: &TridiagonalOperator, k: usize, tol: f64) -> Result<Vec<f64>> {
    if k == 0 || k > t.len() {
        return Err(Error::InvalidArgument(format!(
            "requested {k} eigenvalues of a {}x{} matrix",
            t.len(),
            t.len()
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    let (lo, hi) = t.gershgorin_bounds();
    if t.diag.iter().chain(&t.offdiag).any(|x| !x.is_finite()) {
        return Err(Error::ConvergenceFailure("matrix has non-finite entries".into()));
    }
    let pad = 1e-12 * lo.abs().max(hi.abs()).max(1.0);
    let (lo, hi) = (lo - pad, hi + pad);
    let mut out = Vec::with_capacity(k);
    for index in 0..k {
        // smallest λ with more than `index` eigenvalues below it
        let mut a = out.last().copied().unwrap_or(lo).max(lo);
        let mut b = hi;
        let mut iter = 0;
        while b - a > tol {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if sturm_count(t, mid) > index {
                b = mid;
            } else {
                a = mid;
            }
            iter += 1;
            if iter > BISECTION_MAX_ITER {
                return Err(Error::ConvergenceFailure(format!(
                    "eigenvalue {index} did not converge in {BISECTION_MAX_ITER} bisections"
                )));
            }
        }
        out.push(0.5 * (a + b));
    }
    Ok(out)
}

/// Solves `(T − shift) x = b` by Gaussian elimination without pivoting;
/// vanishing pivots are nudged to keep the solve finite near an eigenvalue.
fn shifted_solve(t: &TridiagonalOperator, shift: f64, rhs: &[f64]) -> Vec<f64> {
    let n = t.len();
    let scale = t.diag.iter().chain(&t.offdiag).fold(0.0_f64, |m, x| m.max(x.abs())).max(1.0);
    let tiny = f64::EPSILON * scale;
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let mut pivot = t.diag[0] - shift;
    if pivot.abs() < tiny {
        pivot = tiny;
    }
    d[0] = rhs[0] / pivot;
    for i in 1..n {
        c[i - 1] = t.offdiag[i - 1] / pivot;
        pivot = t.diag[i] - shift - t.offdiag[i - 1] * c[i - 1];
        if pivot.abs() < tiny {
            pivot = tiny;
        }
        d[i] = (rhs[i] - t.offdiag[i - 1] * d[i - 1]) / pivot;
    }
    for i in (0..n - 1).rev() {
        d[i] -= c[i] * d[i + 1];
    }
    d
}

fn l2(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// Inverse iteration at `lambda`. The result is normalized so that
/// `spacing · Σ u_i² = 1` and its first significant component is positive.
pub fn eigenvector(t: &TridiagonalOperator, lambda: f64) -> Result<Vec<f64>> {
    let n = t.len();
    let mut u: Vec<f64> = (0..n).map(|i| 1.0 + 0.1 * ((i * 7 % 11) as f64)).collect();
    let mut residual = f64::INFINITY;
    for _ in 0..10 {
        let mut x = shifted_solve(t, lambda, &u);
        let norm = l2(&x);
        if !norm.is_finite() || norm == 0.0 {
            return Err(Error::ConvergenceFailure("inverse iteration broke down".into()));
        }
        x.iter_mut().for_each(|v| *v /= norm);
        u = x;
        let tu = t.apply(&u);
        residual = tu.iter().zip(&u).map(|(a, b)| (a - lambda * b).powi(2)).sum::<f64>().sqrt();
        if residual <= EIGENVECTOR_RESIDUAL {
            break;
        }
    }
    if residual > EIGENVECTOR_RESIDUAL {
        return Err(Error::ConvergenceFailure(format!(
            "inverse iteration residual {residual:e} above {EIGENVECTOR_RESIDUAL:e}"
        )));
    }
    let peak = u.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let first = u.iter().find(|x| x.abs() > 1e-8 * peak).copied().unwrap_or(1.0);
    let scale = first.signum() / (t.spacing.sqrt() * l2(&u));
    Ok(u.into_iter().map(|x| x * scale).collect())
}
