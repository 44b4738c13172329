use serde::Serialize;

use crate::error::{Error, Result};
use crate::tolerances::fd_eigenvalue_tolerance;

use super::{discretize, lowest_eigenvalues, sturm_count, RadialGrid};

const BISECTION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelDeviation {
    /// Level index in the partner spectrum (0 = its ground state).
    pub level: usize,
    pub lower_partner: f64,
    pub upper_partner: f64,
    pub deviation: f64,
    pub tolerance: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsospectralityReport {
    pub l: f64,
    pub gamma: f64,
    pub spacing: f64,
    /// Lowest eigenvalues of `H_L`.
    pub spectrum_l: Vec<f64>,
    /// Lowest eigenvalues of `H_{L+1}`.
    pub spectrum_l_plus_1: Vec<f64>,
    pub levels: Vec<LevelDeviation>,
    /// `H_L` has exactly one eigenvalue below the ground state of `H_{L+1}`.
    pub single_extra_state: bool,
    pub passed: bool,
}

impl IsospectralityReport {
    pub fn max_deviation(&self) -> f64 {
        self.levels.iter().map(|l| l.deviation).fold(0.0, f64::max)
    }
}

/// Compares the `k` lowest finite-difference eigenvalues of `H_L` with the
/// `k − 1` lowest of `H_{L+1}`: all but the ground state of `H_L` must pair up.
pub fn verify_isospectrality(l: f64, gamma: f64, grid: &RadialGrid, k: usize) -> Result<IsospectralityReport> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("isospectrality needs k >= 2, got {k}")));
    }
    let lower = discretize(l, gamma, grid)?;
    let upper = discretize(l + 1.0, gamma, grid)?;
    let spectrum_l = lowest_eigenvalues(&lower, k, BISECTION_TOL)?;
    let spectrum_l_plus_1 = lowest_eigenvalues(&upper, k - 1, BISECTION_TOL)?;
    let h = grid.spacing();

    let levels: Vec<LevelDeviation> = spectrum_l[1..]
        .iter()
        .zip(&spectrum_l_plus_1)
        .enumerate()
        .map(|(level, (&a, &b))| LevelDeviation {
            level,
            lower_partner: a,
            upper_partner: b,
            deviation: (a - b).abs(),
            tolerance: fd_eigenvalue_tolerance(h, a.abs().max(b.abs())),
        })
        .collect();

    let gap_tol = levels.first().map_or(0.0, |l| l.tolerance);
    let single_extra_state = sturm_count(&lower, spectrum_l_plus_1[0] - gap_tol) == 1;
    let passed = single_extra_state && levels.iter().all(|l| l.deviation <= l.tolerance);
    Ok(IsospectralityReport {
        l,
        gamma,
        spacing: h,
        spectrum_l,
        spectrum_l_plus_1,
        levels,
        single_extra_state,
        passed,
    })
}

/// Integrates `ψ' = ((L+1)/r − γ/(L+1)) ψ` from `ψ(h) = h^(L+1)` across the
/// grid nodes with classical RK4, then normalizes so that `h Σ ψ_i² = 1`.
///
/// Intervals close to the origin are split into RK4 substeps no longer than
/// `r / SUBSTEP_RESOLUTION`, since the `(L+1)/r` term varies on the scale of `r`.
pub fn integrate_ground_state_ode(l: f64, gamma: f64, grid: &RadialGrid) -> Result<Vec<f64>> {
    if !(l > -1.5) {
        return Err(Error::Domain(format!("ground-state ODE needs L > -3/2, got {l}")));
    }
    if !(gamma > 0.0) {
        return Err(Error::Domain(format!("ground-state ODE needs gamma > 0, got {gamma}")));
    }
    let h = grid.spacing();
    let kappa = gamma / (l + 1.0);
    let slope = |r: f64, psi: f64| ((l + 1.0) / r - kappa) * psi;

    let mut psi = Vec::with_capacity(grid.len());
    let mut y = h.powf(l + 1.0);
    psi.push(y);
    for i in 1..grid.len() {
        let start = i as f64 * h;
        let substeps = SUBSTEP_RESOLUTION.div_ceil(i);
        let s = h / substeps as f64;
        for j in 0..substeps {
            let r = start + j as f64 * s;
            let k1 = slope(r, y);
            let k2 = slope(r + 0.5 * s, y + 0.5 * s * k1);
            let k3 = slope(r + 0.5 * s, y + 0.5 * s * k2);
            let k4 = slope(r + s, y + s * k3);
            y += s / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
        psi.push(y);
    }
    let norm = (h * psi.iter().map(|v| v * v).sum::<f64>()).sqrt();
    Ok(psi.into_iter().map(|v| v / norm).collect())
}

const SUBSTEP_RESOLUTION: usize = 64;
