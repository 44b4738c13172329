//! Structural identities of the factorization: annihilation of nodeless
//! states, `A⁺A⁻ = ℋ_L`, intertwining with the partner, and the graded
//! charge algebra on two-component states.

use serde::Serialize;

use crate::error::Result;
use crate::quasipoly::QuasiPolynomial;

use super::{ground_state_u, partner_potentials, LadderOperator, Superpotential};

/// Largest coefficient magnitude of `A⁻_L u_L` for the normalized nodeless state.
pub fn annihilation_check(l: f64, gamma: f64) -> Result<f64> {
    let u = ground_state_u(l, gamma)?;
    let lowered = LadderOperator::lowering(l, gamma)?.apply_untrimmed(&u);
    Ok(lowered.max_abs_coeff())
}

/// Relative gap between `A⁺_L A⁻_L f` and `H_L f + γ²/(2(L+1)²) f`.
pub fn factorization_residual(f: &QuasiPolynomial, l: f64, gamma: f64) -> Result<f64> {
    let lower = LadderOperator::lowering(l, gamma)?;
    let factored = lower.adjoint().apply(&lower.apply(f));
    let kappa = gamma / (l + 1.0);
    let direct = f
        .apply_radial_hamiltonian(l, gamma)
        .add(&f.scale(0.5 * kappa * kappa))?;
    Ok(factored.relative_distance(&direct))
}

/// Residual of `ℋ_{L+1}(A⁻_L f) = ε A⁻_L f` for an eigenfunction `f` of `ℋ_L`
/// with eigenvalue `epsilon`.
pub fn partner_intertwining_check(
    f: &QuasiPolynomial,
    l: f64,
    gamma: f64,
    epsilon: f64,
) -> Result<f64> {
    let g = LadderOperator::lowering(l, gamma)?.apply(f);
    if g.is_zero() {
        return Ok(0.0);
    }
    let (_, upper) = partner_potentials(&Superpotential::new(l, gamma)?)?;
    Ok(upper.apply_hamiltonian(&g).relative_distance(&g.scale(epsilon)))
}

/// Two-component state `(ψ₁, ψ₂)` acted on by the charges
/// `Q = [[0, 0], [A⁻, 0]]` and `Q† = [[0, A⁺], [0, 0]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Doublet {
    pub upper: QuasiPolynomial,
    pub lower: QuasiPolynomial,
}

impl Doublet {
    fn charge(&self, a_minus: &LadderOperator) -> Result<Doublet> {
        Ok(Doublet {
            upper: QuasiPolynomial::zero(self.upper.kappa())?,
            lower: a_minus.apply(&self.upper),
        })
    }

    fn charge_adjoint(&self, a_minus: &LadderOperator) -> Result<Doublet> {
        Ok(Doublet {
            upper: a_minus.adjoint().apply(&self.lower),
            lower: QuasiPolynomial::zero(self.lower.kappa())?,
        })
    }

    fn add(&self, other: &Doublet) -> Result<Doublet> {
        Ok(Doublet {
            upper: self.upper.add(&other.upper)?,
            lower: self.lower.add(&other.lower)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbeResidual {
    /// Largest coefficient of either component of `Q²ψ`.
    pub q_squared: f64,
    /// Relative gap between the upper block of `{Q, Q†}ψ` and `ℋ_L ψ₁`.
    pub h1_residual: f64,
    /// Relative gap between the lower block of `{Q, Q†}ψ` and `ℋ_{L+1} ψ₂`.
    pub h2_residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BlockAlgebraReport {
    pub l: f64,
    pub gamma: f64,
    pub probes: Vec<ProbeResidual>,
}

impl BlockAlgebraReport {
    pub fn max_q_squared(&self) -> f64 {
        self.probes.iter().map(|p| p.q_squared).fold(0.0, f64::max)
    }

    pub fn max_hamiltonian_residual(&self) -> f64 {
        self.probes
            .iter()
            .map(|p| p.h1_residual.max(p.h2_residual))
            .fold(0.0, f64::max)
    }

    pub fn passed(&self, tolerance: f64) -> bool {
        self.max_q_squared() == 0.0 && self.max_hamiltonian_residual() <= tolerance
    }
}

/// Checks `Q² = 0` and that `{Q, Q†}` is block diagonal with blocks `ℋ_L`
/// and `ℋ_{L+1}` on each probe doublet.
pub fn susy_block_algebra_check(l: f64, gamma: f64, probes: &[Doublet]) -> Result<BlockAlgebraReport> {
    let a_minus = LadderOperator::lowering(l, gamma)?;
    let (h1, h2) = partner_potentials(&a_minus.w)?;
    let mut residuals = Vec::with_capacity(probes.len());
    for psi in probes {
        let q_psi = psi.charge(&a_minus)?;
        let q2 = q_psi.charge(&a_minus)?;
        let anti = q_psi
            .charge_adjoint(&a_minus)?
            .add(&psi.charge_adjoint(&a_minus)?.charge(&a_minus)?)?;
        residuals.push(ProbeResidual {
            q_squared: q2.upper.max_abs_coeff().max(q2.lower.max_abs_coeff()),
            h1_residual: anti.upper.relative_distance(&h1.apply_hamiltonian(&psi.upper)),
            h2_residual: anti.lower.relative_distance(&h2.apply_hamiltonian(&psi.lower)),
        });
    }
    Ok(BlockAlgebraReport { l, gamma, probes: residuals })
}
