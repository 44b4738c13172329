//! Factorization machinery for the radial Coulomb-like Hamiltonian
//! `H_L = -1/2 d²/dr² + L(L+1)/(2r²) - γ/r` with real `L`.
//!
//! The superpotential `W_L = -(L+1)/r + γ/(L+1)` factorizes the shifted
//! Hamiltonian `ℋ_L = H_L + κ_L²/2` as `A⁺_L A⁻_L`, and its partner
//! `A⁻_L A⁺_L` is `ℋ_{L+1}` up to the same constant. Raising operators walk
//! down the hierarchy from the nodeless state of `H_{N-1}` to any `u_{N,L}`.

mod chain;
mod checks;

pub use chain::{build_u, energy_internal, ground_state_u, radial_r, principal_offset};
pub use checks::{
    annihilation_check, factorization_residual, partner_intertwining_check,
    susy_block_algebra_check, BlockAlgebraReport, Doublet, ProbeResidual,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quasipoly::QuasiPolynomial;
use crate::tolerances::EXACT_IDENTITY;

/// `W_L(r) = -(L+1)/r + γ/(L+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Superpotential {
    l: f64,
    gamma: f64,
}

impl Superpotential {
    pub fn new(l: f64, gamma: f64) -> Result<Self> {
        if !(l > -1.0) || !l.is_finite() {
            return Err(Error::Domain(format!("superpotential needs L > -1, got {l}")));
        }
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(Error::Domain(format!("superpotential needs gamma > 0, got {gamma}")));
        }
        Ok(Self { l, gamma })
    }

    pub fn l(&self) -> f64 {
        self.l
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Decay rate `κ_L = γ/(L+1)` of the nodeless state.
    pub fn kappa(&self) -> f64 {
        self.gamma / (self.l + 1.0)
    }

    pub fn value(&self, r: f64) -> Result<f64> {
        if !(r > 0.0) {
            return Err(Error::Domain(format!("superpotential needs r > 0, got {r}")));
        }
        Ok(-(self.l + 1.0) / r + self.kappa())
    }

    /// `W·f` in the quasi-polynomial algebra.
    pub fn multiply(&self, f: &QuasiPolynomial) -> QuasiPolynomial {
        f.shift_power(-1)
            .scale(-(self.l + 1.0))
            .add(&f.scale(self.kappa()))
            .expect("r^-1 f and f share a ladder")
    }

    /// Expands `½(W² ∓ W')` term by term for `W = a/r + b`, giving the
    /// lower (`-`) and upper (`+`) partner potentials.
    fn riccati_expansion(&self) -> (RadialPotentialCoeffs, RadialPotentialCoeffs) {
        let a = -(self.l + 1.0);
        let b = self.kappa();
        // W² = a²/r² + 2ab/r + b²,  W' = -a/r²
        let w2 = (a * a, 2.0 * a * b, b * b);
        let dw = -a;
        let lower = RadialPotentialCoeffs {
            centrifugal: w2.0 - dw,
            coulomb: -0.5 * w2.1,
            constant: 0.5 * w2.2,
        };
        let upper = RadialPotentialCoeffs {
            centrifugal: w2.0 + dw,
            coulomb: -0.5 * w2.1,
            constant: 0.5 * w2.2,
        };
        (lower, upper)
    }

    /// Closed forms for `ℋ_L` and `ℋ_{L+1}`.
    fn closed_form_partners(&self) -> (RadialPotentialCoeffs, RadialPotentialCoeffs) {
        let l = self.l;
        let constant = self.gamma * self.gamma / (2.0 * (l + 1.0) * (l + 1.0));
        (
            RadialPotentialCoeffs { centrifugal: l * (l + 1.0), coulomb: self.gamma, constant },
            RadialPotentialCoeffs {
                centrifugal: (l + 1.0) * (l + 2.0),
                coulomb: self.gamma,
                constant,
            },
        )
    }

    /// Largest relative per-coefficient gap between the Riccati expansion and
    /// the closed-form partner potentials.
    pub fn riccati_deviation(&self) -> f64 {
        let (el, eu) = self.riccati_expansion();
        let (cl, cu) = self.closed_form_partners();
        el.relative_deviation(&cl).max(eu.relative_deviation(&cu))
    }
}

/// `V(r) = centrifugal/(2r²) - coulomb/r + constant`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialPotentialCoeffs {
    pub centrifugal: f64,
    pub coulomb: f64,
    pub constant: f64,
}

impl RadialPotentialCoeffs {
    pub fn value(&self, r: f64) -> f64 {
        self.centrifugal / (2.0 * r * r) - self.coulomb / r + self.constant
    }

    /// `(-½ d²/dr² + V) f`.
    pub fn apply_hamiltonian(&self, f: &QuasiPolynomial) -> QuasiPolynomial {
        let kinetic = f.differentiate().differentiate().scale(-0.5);
        let centrifugal = f.shift_power(-2).scale(0.5 * self.centrifugal);
        let coulomb = f.shift_power(-1).scale(-self.coulomb);
        let constant = f.scale(self.constant);
        kinetic
            .add(&centrifugal)
            .and_then(|s| s.add(&coulomb))
            .and_then(|s| s.add(&constant))
            .expect("terms of one function are always compatible")
    }

    fn relative_deviation(&self, other: &Self) -> f64 {
        let pairs = [
            (self.centrifugal, other.centrifugal),
            (self.coulomb, other.coulomb),
            (self.constant, other.constant),
        ];
        pairs
            .iter()
            .map(|(a, b)| {
                let scale = a.abs().max(b.abs());
                if scale == 0.0 {
                    0.0
                } else {
                    (a - b).abs() / scale
                }
            })
            .fold(0.0, f64::max)
    }
}

/// Returns `(ℋ_L, ℋ_{L+1})` after checking the closed forms against the
/// term-wise Riccati expansion of `½(W² ∓ W')`.
pub fn partner_potentials(w: &Superpotential) -> Result<(RadialPotentialCoeffs, RadialPotentialCoeffs)> {
    let deviation = w.riccati_deviation();
    if deviation > EXACT_IDENTITY {
        return Err(Error::RiccatiMismatch { deviation });
    }
    Ok(w.closed_form_partners())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LadderSign {
    /// `A⁺ = (-d/dr + W)/√2`
    Raising,
    /// `A⁻ = (d/dr + W)/√2`
    Lowering,
}

/// `A±_L = (∓ d/dr + W_L)/√2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LadderOperator {
    pub sign: LadderSign,
    pub w: Superpotential,
}

impl LadderOperator {
    pub fn raising(l: f64, gamma: f64) -> Result<Self> {
        Ok(Self { sign: LadderSign::Raising, w: Superpotential::new(l, gamma)? })
    }

    pub fn lowering(l: f64, gamma: f64) -> Result<Self> {
        Ok(Self { sign: LadderSign::Lowering, w: Superpotential::new(l, gamma)? })
    }

    pub fn adjoint(&self) -> Self {
        let sign = match self.sign {
            LadderSign::Raising => LadderSign::Lowering,
            LadderSign::Lowering => LadderSign::Raising,
        };
        Self { sign, w: self.w }
    }

    fn derivative_sign(&self) -> f64 {
        match self.sign {
            LadderSign::Raising => -1.0,
            LadderSign::Lowering => 1.0,
        }
    }

    /// Applies the operator using `d/dr`, `r^-1` and scaling from the
    /// quasi-polynomial algebra.
    pub fn apply(&self, f: &QuasiPolynomial) -> QuasiPolynomial {
        f.differentiate()
            .scale(self.derivative_sign())
            .add(&self.w.multiply(f))
            .expect("f' and W f share a ladder")
            .scale(std::f64::consts::FRAC_1_SQRT_2)
    }

    /// Same map computed per coefficient without trimming, so that exact
    /// cancellations show up as residual dust rather than being dropped.
    pub(crate) fn apply_untrimmed(&self, f: &QuasiPolynomial) -> QuasiPolynomial {
        let s = self.derivative_sign();
        let a = f.alpha();
        let l1 = self.w.l() + 1.0;
        let b = self.w.kappa();
        let mut raw = vec![0.0; f.coeffs().len() + 1];
        for (k, &c) in f.coeffs().iter().enumerate() {
            raw[k] += (s * (a + k as f64) - l1) * c;
            raw[k + 1] += (b - s * f.kappa()) * c;
        }
        for c in raw.iter_mut() {
            *c *= std::f64::consts::FRAC_1_SQRT_2;
        }
        QuasiPolynomial::assemble(a - 1.0, raw, f.kappa(), 0.0, false)
    }
}
