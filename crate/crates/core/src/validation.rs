//! Composite validation run: every structural identity of the factorization
//! plus the finite-difference cross-checks, reported check by check.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::model::{hydrogen_limit_check, HartmannParams};
use crate::numeric::{
    discretize, eigenvector, integrate_ground_state_ode, lowest_eigenvalues, verify_isospectrality,
    RadialGrid,
};
use crate::quasipoly::QuasiPolynomial;
use crate::susy::{
    annihilation_check, build_u, energy_internal, factorization_residual, ground_state_u,
    partner_intertwining_check, susy_block_algebra_check, Doublet, Superpotential,
};
use crate::tolerances::{
    fd_eigenvalue_tolerance, EIGEN_RESIDUAL, EXACT_IDENTITY, FACTORIZATION, FD_EIGENVECTOR,
    HYDROGEN_LIMIT, INTERTWINING, ODE_GROUND_STATE, ORTHONORMALITY,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Numeric,
    All,
}

impl Suite {
    fn algebra(self) -> bool {
        matches!(self, Suite::Algebra | Suite::All)
    }

    fn numeric(self) -> bool {
        matches!(self, Suite::Numeric | Suite::All)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationConfig {
    pub params: HartmannParams,
    pub m_values: Vec<i64>,
    /// States with `ν' + n' + 1 ≤ max_n` are covered, i.e. `N − |M| ≤ max_n`.
    pub max_n: u32,
    /// Interior points of the finite-difference grid.
    pub grid_points: usize,
    /// Fixed grid extent; `None` uses `30 N / γ` for the highest level checked.
    pub r_max: Option<f64>,
    pub suite: Suite,
    /// Corrupts one analytic state before checking, to prove the harness can fail.
    pub inject_error: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub measured: f64,
    pub threshold: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: String, measured: f64, threshold: f64) {
        let passed = measured <= threshold;
        self.checks.push(CheckResult { name, measured, threshold, passed });
    }
}

const ODE_MAX_SPACING: f64 = 0.01;

/// Flips the sign of the last coefficient, or appends a term to a monomial.
fn corrupt(u: &QuasiPolynomial) -> Result<QuasiPolynomial> {
    let mut coeffs = u.coeffs().to_vec();
    if coeffs.len() >= 2 {
        let last = coeffs.len() - 1;
        coeffs[last] = -coeffs[last];
    } else {
        coeffs.push(coeffs[0]);
    }
    QuasiPolynomial::from_dense(u.alpha(), coeffs, u.kappa())
}

struct Level {
    n_prime: u32,
    n: f64,
    u: QuasiPolynomial,
}

pub fn run_validation(cfg: &ValidationConfig) -> Result<ValidationReport> {
    if cfg.max_n == 0 {
        return Err(Error::InvalidArgument("max-n must be at least 1".into()));
    }
    if cfg.m_values.is_empty() {
        return Err(Error::InvalidArgument("at least one m value is required".into()));
    }
    let gamma = cfg.params.gamma();
    let mut report = ValidationReport { checks: Vec::new() };
    let mut injected = !cfg.inject_error;

    if cfg.suite.algebra() {
        let h = hydrogen_limit_check(gamma)?;
        report.push(format!("hydrogen_limit[gamma={gamma}]"), h.max_deviation(), HYDROGEN_LIMIT);
    }

    for &m in &cfg.m_values {
        let m_abs = cfg.params.m_abs(m);
        for nu in 0..cfg.max_n {
            let l = m_abs + f64::from(nu);
            let tag = format!("m={m},L={l:.6}");
            let mut levels = Vec::new();
            for n_prime in 0..(cfg.max_n - nu) {
                let n = m_abs + f64::from(nu + n_prime + 1);
                let mut u = build_u(n, l, gamma)?;
                if !injected && (n_prime > 0 || cfg.max_n - nu == 1) {
                    u = corrupt(&u)?;
                    injected = true;
                }
                levels.push(Level { n_prime, n, u });
            }
            if cfg.suite.algebra() {
                algebra_checks(&mut report, &tag, l, gamma, &levels)?;
            }
            if cfg.suite.numeric() {
                numeric_checks(&mut report, cfg, &tag, l, gamma, &levels)?;
            }
        }
    }
    Ok(report)
}

fn algebra_checks(
    report: &mut ValidationReport,
    tag: &str,
    l: f64,
    gamma: f64,
    levels: &[Level],
) -> Result<()> {
    let w = Superpotential::new(l, gamma)?;
    report.push(format!("riccati[{tag}]"), w.riccati_deviation(), EXACT_IDENTITY);
    report.push(format!("annihilation[{tag}]"), annihilation_check(l, gamma)?, EXACT_IDENTITY);

    let shift = 0.5 * w.kappa() * w.kappa();
    for lv in levels {
        let name = format!("{tag},N={:.6}", lv.n);
        report.push(
            format!("factorization[{name}]"),
            factorization_residual(&lv.u, l, gamma)?,
            FACTORIZATION,
        );
        let e = energy_internal(lv.n, gamma);
        let h_u = lv.u.apply_radial_hamiltonian(l, gamma);
        report.push(format!("eigen_residual[{name}]"), h_u.relative_distance(&lv.u.scale(e)), EIGEN_RESIDUAL);
        if lv.n_prime > 0 {
            report.push(
                format!("intertwining[{name}]"),
                partner_intertwining_check(&lv.u, l, gamma, e + shift)?,
                INTERTWINING,
            );
        }
        let nodes = lv.u.positive_roots().len() as f64;
        report.push(format!("node_count[{name}]"), (nodes - f64::from(lv.n_prime)).abs(), 0.0);
    }

    let mut ortho: f64 = 0.0;
    for (i, a) in levels.iter().enumerate() {
        for b in &levels[i..] {
            let delta = if std::ptr::eq(a, b) { 1.0 } else { 0.0 };
            ortho = ortho.max((a.u.inner_product(&b.u)? - delta).abs());
        }
    }
    report.push(format!("orthonormality[{tag}]"), ortho, ORTHONORMALITY);

    // Each analytic level paired with the partner state of the same N one rung up.
    let mut probes = Vec::new();
    for lv in levels {
        let partner = if lv.n_prime == 0 {
            ground_state_u(l + 1.0, gamma)?
        } else {
            build_u(lv.n, l + 1.0, gamma)?
        };
        probes.push(Doublet { upper: lv.u.clone(), lower: partner });
    }
    let block = susy_block_algebra_check(l, gamma, &probes)?;
    report.push(format!("q_squared[{tag}]"), block.max_q_squared(), 0.0);
    report.push(format!("anticommutator[{tag}]"), block.max_hamiltonian_residual(), FACTORIZATION);
    Ok(())
}

fn numeric_checks(
    report: &mut ValidationReport,
    cfg: &ValidationConfig,
    tag: &str,
    l: f64,
    gamma: f64,
    levels: &[Level],
) -> Result<()> {
    let top = levels.last().map_or(l + 1.0, |lv| lv.n);
    let grid = match cfg.r_max {
        Some(r_max) => RadialGrid::new(r_max, cfg.grid_points)?,
        None => RadialGrid::for_level(top, gamma, cfg.grid_points)?,
    };
    let h = grid.spacing();
    let t = discretize(l, gamma, &grid)?;
    let eigenvalues = lowest_eigenvalues(&t, levels.len(), 1e-12)?;
    for (lv, &e_fd) in levels.iter().zip(&eigenvalues) {
        let name = format!("{tag},N={:.6}", lv.n);
        let e = energy_internal(lv.n, gamma);
        report.push(format!("fd_eigenvalue[{name}]"), (e_fd - e).abs(), fd_eigenvalue_tolerance(h, e));

        let v = eigenvector(&t, e_fd)?;
        let mut same: f64 = 0.0;
        let mut flipped: f64 = 0.0;
        for (r, vi) in grid.nodes().zip(&v) {
            let a = lv.u.evaluate(r)?;
            same = same.max((a - vi).abs());
            flipped = flipped.max((a + vi).abs());
        }
        report.push(format!("fd_eigenvector[{name}]"), same.min(flipped), FD_EIGENVECTOR);
    }

    let k = levels.len().max(2);
    let iso = verify_isospectrality(l, gamma, &grid, k)?;
    let iso_margin = iso
        .levels
        .iter()
        .map(|d| d.deviation / d.tolerance)
        .fold(0.0, f64::max);
    report.push(
        format!("isospectrality[{tag}]"),
        if iso.single_extra_state { iso_margin } else { f64::INFINITY },
        1.0,
    );

    let ode_extent = 30.0 * (l + 1.0) / gamma;
    let ode_points = (ode_extent / ODE_MAX_SPACING).ceil() as usize;
    let ode_grid = RadialGrid::new(ode_extent, ode_points.max(RadialGrid::MIN_POINTS))?;
    let psi = integrate_ground_state_ode(l, gamma, &ode_grid)?;
    let u0 = ground_state_u(l, gamma)?;
    let mut err: f64 = 0.0;
    for (r, p) in ode_grid.nodes().zip(&psi) {
        err = err.max((u0.evaluate(r)? - p).abs());
    }
    report.push(format!("ode_ground_state[{tag}]"), err, ODE_GROUND_STATE);
    Ok(())
}
