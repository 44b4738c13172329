//! Published closed forms for the lowest radial functions of the Hartmann
//! problem, written out coefficient by coefficient.
//!
//! Each form is `Σ_k coeffs[k] r^(alpha+k) e^(-kappa r)`.

use crate::gamma::gamma;

#[derive(Debug, Clone, PartialEq)]
pub struct ClosedForm {
    pub alpha: f64,
    pub kappa: f64,
    pub coeffs: Vec<f64>,
}

impl ClosedForm {
    pub fn evaluate(&self, r: f64) -> f64 {
        let poly: f64 = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c * r.powi(k as i32))
            .sum();
        poly * r.powf(self.alpha) * (-self.kappa * r).exp()
    }
}

/// `R_{|M|+1,|M|} = (2γ/(|M|+1))^{|M|+3/2} Γ(2|M|+3)^{-1/2} r^{|M|} e^{-γr/(|M|+1)}`.
pub fn r_ground(m_abs: f64, gamma_c: f64) -> ClosedForm {
    let kappa = gamma_c / (m_abs + 1.0);
    let norm = (2.0 * kappa).powf(m_abs + 1.5) / gamma(2.0 * m_abs + 3.0).sqrt();
    ClosedForm { alpha: m_abs, kappa, coeffs: vec![norm] }
}

/// `R_{|M|+2,|M|+1} = (2γ/(|M|+2))^{|M|+5/2} Γ(2|M|+5)^{-1/2} r^{|M|+1} e^{-γr/(|M|+2)}`.
pub fn r_second_nodeless(m_abs: f64, gamma_c: f64) -> ClosedForm {
    let kappa = gamma_c / (m_abs + 2.0);
    let norm = (2.0 * kappa).powf(m_abs + 2.5) / gamma(2.0 * m_abs + 5.0).sqrt();
    ClosedForm { alpha: m_abs + 1.0, kappa, coeffs: vec![norm] }
}

/// `R_{|M|+2,|M|} = −(2γ/(|M|+2))^{|M|+3/2} [2(|M|+2)Γ(2|M|+3)]^{-1/2}
/// r^{|M|} e^{-γr/(|M|+2)} (2|M|+2 − 2γr/(|M|+2))`, sign as published.
pub fn r_first_excited(m_abs: f64, gamma_c: f64) -> ClosedForm {
    let kappa = gamma_c / (m_abs + 2.0);
    let norm = (2.0 * kappa).powf(m_abs + 1.5)
        / (2.0 * (m_abs + 2.0) * gamma(2.0 * m_abs + 3.0)).sqrt();
    ClosedForm {
        alpha: m_abs,
        kappa,
        coeffs: vec![-norm * (2.0 * m_abs + 2.0), norm * 2.0 * kappa],
    }
}

/// Unnormalized `u_{|M|+2,|M|} ∝ r e^{-γr/(|M|+2)} (−r^{|M|} + γ r^{|M|+1}/((|M|+2)(|M|+1)))`.
pub fn u_worked_example(m_abs: f64, gamma_c: f64) -> ClosedForm {
    ClosedForm {
        alpha: m_abs + 1.0,
        kappa: gamma_c / (m_abs + 2.0),
        coeffs: vec![-1.0, gamma_c / ((m_abs + 2.0) * (m_abs + 1.0))],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_from_origin;

    #[test]
    fn closed_forms_are_normalized() {
        for m_abs in [0.5, 1.0, 2.3] {
            for g in [0.5, 2.0] {
                for f in [r_ground(m_abs, g), r_second_nodeless(m_abs, g), r_first_excited(m_abs, g)] {
                    let upper = 60.0 / f.kappa;
                    let norm = integrate_from_origin(|r| (f.evaluate(r) * r).powi(2), upper, 1e-13);
                    assert!((norm - 1.0).abs() < 1e-9, "{f:?} -> {norm}");
                }
            }
        }
    }
}
