//! Physical layer for the ring-shaped Hartmann potential
//!
//! `V(r, θ) = ησ²ε₀ (2a₀/r − η a₀² / (r² sin²θ))`.
//!
//! Separation leaves a radial problem of Coulomb type with strength
//! `γ = ησ²` (lengths in a₀) and a real angular constant `L = ν' + |M|`,
//! `|M| = √(m² + η²σ²)`. Energies depend on `N = L + 1 + n'` only.

mod hydrogen;

pub use hydrogen::{hydrogen_limit_check, hydrogen_radial_oracle, HydrogenLimitEntry, HydrogenLimitReport};

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quasipoly::QuasiPolynomial;
use crate::susy::{build_u, energy_internal, radial_r};
use crate::tolerances::QUANTUM_INTEGRALITY;

/// Dimensionless strengths `η`, `σ` of the potential.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HartmannParams {
    eta: f64,
    sigma: f64,
}

impl HartmannParams {
    pub fn new(eta: f64, sigma: f64) -> Result<Self> {
        for (name, v) in [("eta", eta), ("sigma", sigma)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidArgument(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self { eta, sigma })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    /// Coulomb strength of the radial equation with lengths in a₀: `γ = ησ²`.
    pub fn gamma(&self) -> f64 {
        self.eta * self.sigma * self.sigma
    }

    /// `|M|` for azimuthal number `m`.
    pub fn m_abs(&self, m: i64) -> f64 {
        let es = self.eta * self.sigma;
        ((m * m) as f64 + es * es).sqrt()
    }
}

/// Mass, squared charge and ħ; defaults are all one.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitSystem {
    mu: f64,
    e_squared: f64,
    hbar: f64,
}

impl Default for UnitSystem {
    fn default() -> Self {
        Self { mu: 1.0, e_squared: 1.0, hbar: 1.0 }
    }
}

impl UnitSystem {
    pub fn new(mu: f64, e_squared: f64, hbar: f64) -> Result<Self> {
        for (name, v) in [("mu", mu), ("e^2", e_squared), ("hbar", hbar)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidArgument(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Self { mu, e_squared, hbar })
    }

    /// Bohr radius `a₀ = ħ²/(μe²)`.
    pub fn bohr_radius(&self) -> f64 {
        self.hbar * self.hbar / (self.mu * self.e_squared)
    }

    /// `ε₀ = −μe⁴/(2ħ²)`.
    pub fn epsilon0(&self) -> f64 {
        -0.5 * self.mu * self.e_squared * self.e_squared / (self.hbar * self.hbar)
    }

    /// Energy unit of the internal radial equation, `μe⁴/ħ² = 2|ε₀|`.
    pub fn energy_unit(&self) -> f64 {
        2.0 * self.epsilon0().abs()
    }
}

/// Labels `(m, ν', n')` with the derived `|M|`, `L` and `N`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub m: i64,
    pub nu_prime: u32,
    pub n_prime: u32,
    pub m_abs: f64,
    pub l: f64,
    pub n: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub qn: QuantumNumbers,
    pub energy_internal: f64,
    /// `−Λ/N²` in the units of the supplied `UnitSystem`.
    pub energy_physical: f64,
    /// `Λ = η²σ⁴|ε₀|`.
    pub lambda: f64,
}

impl SpectrumEntry {
    /// Energy in units of `|ε₀|`, i.e. `−η²σ⁴/N²`.
    pub fn energy_over_eps0(&self) -> f64 {
        // Internal energies are in units of 2|ε₀|.
        2.0 * self.energy_internal
    }
}

pub fn potential_value(p: &HartmannParams, units: &UnitSystem, r: f64, theta: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::Domain(format!("potential needs r > 0, got {r}")));
    }
    let s = theta.sin();
    if s.abs() < 1e-9 {
        return Err(Error::Domain(format!(
            "potential diverges on the axis, theta = {theta}"
        )));
    }
    let a0 = units.bohr_radius();
    Ok(p.gamma() * units.epsilon0() * (2.0 * a0 / r - p.eta * a0 * a0 / (r * r * s * s)))
}

pub fn derive_quantum_numbers(p: &HartmannParams, m: i64, nu_prime: i64, n_prime: i64) -> Result<QuantumNumbers> {
    if nu_prime < 0 || n_prime < 0 {
        return Err(Error::InvalidQuantumNumbers(format!(
            "nu' and n' must be non-negative, got nu' = {nu_prime}, n' = {n_prime}"
        )));
    }
    let m_abs = p.m_abs(m);
    // |M| plus an integer, so states sharing ν' + n' get bit-identical N.
    let l = m_abs + nu_prime as f64;
    let n = m_abs + (nu_prime + n_prime + 1) as f64;
    Ok(QuantumNumbers {
        m,
        nu_prime: nu_prime as u32,
        n_prime: n_prime as u32,
        m_abs,
        l,
        n,
    })
}

fn entry(p: &HartmannParams, units: &UnitSystem, qn: QuantumNumbers) -> SpectrumEntry {
    let g = p.gamma();
    let lambda = g * g * units.epsilon0().abs();
    SpectrumEntry {
        qn,
        energy_internal: energy_internal(qn.n, g),
        energy_physical: -lambda / (qn.n * qn.n),
        lambda,
    }
}

/// All states with `m` in `m_range` and `ν' + n' ≤ max_excitation`, sorted by
/// energy; ties are ordered by `(|m|, ν', n', m)`.
pub fn spectrum(
    p: &HartmannParams,
    units: &UnitSystem,
    m_range: RangeInclusive<i64>,
    max_excitation: u32,
) -> Vec<SpectrumEntry> {
    let k = i64::from(max_excitation);
    let mut out = Vec::new();
    for m in m_range {
        for nu in 0..=k {
            for np in 0..=(k - nu) {
                let qn = derive_quantum_numbers(p, m, nu, np).expect("indices are non-negative");
                out.push(entry(p, units, qn));
            }
        }
    }
    out.sort_by(|a, b| {
        a.energy_internal
            .total_cmp(&b.energy_internal)
            .then(a.qn.m.abs().cmp(&b.qn.m.abs()))
            .then(a.qn.nu_prime.cmp(&b.qn.nu_prime))
            .then(a.qn.n_prime.cmp(&b.qn.n_prime))
            .then(a.qn.m.cmp(&b.qn.m))
    });
    out
}

/// Number of `L` values sharing level `N` for azimuthal number `m`: `N − |M|`.
pub fn degeneracy_at_level(p: &HartmannParams, m: i64, n: f64) -> Result<u32> {
    let offset = n - p.m_abs(m) - 1.0;
    let k = offset.round();
    if !offset.is_finite() || (offset - k).abs() > QUANTUM_INTEGRALITY || k < 0.0 {
        return Err(Error::InvalidQuantumNumbers(format!(
            "N = {n} is not reachable for m = {m} (N - |M| - 1 = {offset})"
        )));
    }
    Ok(k as u32 + 1)
}

/// Analytic radial state with lengths measured in `length_unit` (= a₀).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadialSolution {
    pub qn: QuantumNumbers,
    pub gamma: f64,
    pub u: QuasiPolynomial,
    pub radial: QuasiPolynomial,
    pub energy_internal: f64,
    pub length_unit: f64,
}

/// `R_{N,L}` normalized with `∫ R² r² dr = 1`, `r` in units of a₀.
pub fn radial_wavefunction(p: &HartmannParams, units: &UnitSystem, qn: &QuantumNumbers) -> Result<RadialSolution> {
    let check = derive_quantum_numbers(p, qn.m, i64::from(qn.nu_prime), i64::from(qn.n_prime))?;
    if (check.l - qn.l).abs() > QUANTUM_INTEGRALITY || (check.n - qn.n).abs() > QUANTUM_INTEGRALITY {
        return Err(Error::InvalidQuantumNumbers(format!(
            "derived values (L = {}, N = {}) do not match these parameters",
            qn.l, qn.n
        )));
    }
    let gamma = p.gamma();
    let u = build_u(check.n, check.l, gamma)?;
    let radial = radial_r(&u);
    Ok(RadialSolution {
        qn: check,
        gamma,
        u,
        radial,
        energy_internal: energy_internal(check.n, gamma),
        length_unit: units.bohr_radius(),
    })
}
