use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::quasipoly::QuasiPolynomial;
use crate::tolerances::QUANTUM_INTEGRALITY;

use super::LadderOperator;

/// Normalized nodeless state `N_L r^(L+1) e^(-κ_L r)` of `ℋ_L`, with
/// `N_L = (2κ_L)^(L+3/2) / √Γ(2L+3)`.
pub fn ground_state_u(l: f64, gamma: f64) -> Result<QuasiPolynomial> {
    // κ_L > 0 needs L > -1, which is tighter than the L > -3/2 that keeps Γ(2L+3) finite.
    if !(l > -1.0) || !l.is_finite() {
        return Err(Error::Domain(format!("ground state needs L > -1, got {l}")));
    }
    if !(gamma > 0.0) || !gamma.is_finite() {
        return Err(Error::Domain(format!("ground state needs gamma > 0, got {gamma}")));
    }
    let kappa = gamma / (l + 1.0);
    let ln_norm = (l + 1.5) * (2.0 * kappa).ln() - 0.5 * ln_gamma(2.0 * l + 3.0)?;
    QuasiPolynomial::monomial(l + 1.0, ln_norm.exp(), kappa)
}

/// Radial excitation `n' = N - L - 1`, checked to be a non-negative integer.
pub fn principal_offset(n: f64, l: f64) -> Result<u32> {
    let offset = n - l - 1.0;
    let rounded = offset.round();
    if !offset.is_finite() || (offset - rounded).abs() > QUANTUM_INTEGRALITY || rounded < 0.0 {
        return Err(Error::InvalidQuantumNumbers(format!(
            "N - L - 1 = {offset} is not a non-negative integer (N = {n}, L = {l})"
        )));
    }
    Ok(rounded as u32)
}

/// Builds `u_{N,L}` by raising the nodeless state of `H_{N-1}` through
/// `A⁺_{N-2}, …, A⁺_L`, then normalizing once at the end.
///
/// Sign convention: the coefficient of the lowest power of `r` is positive.
pub fn build_u(n: f64, l: f64, gamma: f64) -> Result<QuasiPolynomial> {
    let excitation = principal_offset(n, l)?;
    // Rungs are L + j so the chain never drifts off the ladder through N - 1 - i.
    let mut u = ground_state_u(l + f64::from(excitation), gamma)?;
    for j in (0..excitation).rev() {
        u = LadderOperator::raising(l + f64::from(j), gamma)?.apply(&u);
    }
    let norm = u.norm_squared()?.sqrt();
    let sign = if u.lowest_coeff() < 0.0 { -1.0 } else { 1.0 };
    Ok(u.scale(sign / norm))
}

/// `R = u/r`.
pub fn radial_r(u: &QuasiPolynomial) -> QuasiPolynomial {
    u.shift_power(-1)
}

/// `E_N = -γ²/(2N²)` in units with ħ = μ = e = 1.
pub fn energy_internal(n: f64, gamma: f64) -> f64 {
    -gamma * gamma / (2.0 * n * n)
}
