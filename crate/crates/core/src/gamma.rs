//! Gamma function for positive real arguments.
//!
//! Lanczos approximation with g = 607/128 and 15 coefficients (Godfrey),
//! accurate to a few ulps of `ln Γ` over the positive axis.

use crate::error::{Error, Result};

const LANCZOS_G_HALF: f64 = 5.242_187_5; // g + 1/2
const LANCZOS_COEFFS: [f64; 14] = [
    57.156_235_665_862_923_517,
    -59.597_960_355_475_491_248,
    14.136_097_974_741_747_174,
    -0.491_913_816_097_620_199_78,
    0.339_946_499_848_118_886_99e-4,
    0.465_236_289_270_485_756_65e-4,
    -0.983_744_753_048_795_646_77e-4,
    0.158_088_703_224_912_488_84e-3,
    -0.210_264_441_724_104_883_19e-3,
    0.217_439_618_115_212_643_20e-3,
    -0.164_318_106_536_763_890_22e-3,
    0.844_182_239_838_527_432_93e-4,
    -0.261_908_384_015_814_086_70e-4,
    0.368_991_826_595_316_227_04e-5,
];
const LANCZOS_C0: f64 = 0.999_999_999_999_997_092;
const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

/// `ln Γ(x)` for `x > 0`.
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma requires x > 0, got {x}")));
    }
    if x < 0.5 {
        // Γ(x) = Γ(x + 1) / x keeps the series in its accurate range.
        return Ok(ln_gamma_lanczos(x + 1.0) - x.ln());
    }
    Ok(ln_gamma_lanczos(x))
}

fn ln_gamma_lanczos(x: f64) -> f64 {
    let t = x + LANCZOS_G_HALF;
    let mut series = LANCZOS_C0;
    let mut denom = x;
    for c in LANCZOS_COEFFS {
        denom += 1.0;
        series += c / denom;
    }
    (x + 0.5) * t.ln() - t + (SQRT_TWO_PI * series / x).ln()
}

/// `Γ(x)` for `x > 0`, relative error below 1e-12 for arguments up to ~170.
pub fn gamma_real(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("gamma requires x > 0, got {x}")));
    }
    // Small positive integers are returned exactly.
    if x <= 20.0 && x.fract() == 0.0 {
        return Ok((1..x as u64).map(|k| k as f64).product());
    }
    ln_gamma(x).map(f64::exp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn integer_and_half_integer_values() {
        assert_eq!(gamma_real(3.0).unwrap(), 2.0);
        assert_eq!(gamma_real(1.0).unwrap(), 1.0);
        assert_eq!(gamma_real(6.0).unwrap(), 120.0);
        assert!(rel(gamma_real(0.5).unwrap(), PI.sqrt()) < 1e-14);
        assert!(rel(gamma_real(1.5).unwrap(), 0.5 * PI.sqrt()) < 1e-14);
        assert!(rel(gamma_real(25.0).unwrap(), 6.204_484_017_332_394e23) < 1e-13);
    }

    #[test]
    fn gamma_4_4_from_recurrence() {
        // Γ(1.4) = 0.887263817503075...
        let g14 = 0.887_263_817_503_075_1;
        let expected = 3.4 * 2.4 * 1.4 * g14;
        assert!(rel(gamma_real(4.4).unwrap(), expected) < 1e-13);
    }

    #[test]
    fn rejects_non_positive() {
        assert!(matches!(gamma_real(0.0), Err(Error::Domain(_))));
        assert!(matches!(gamma_real(-1.5), Err(Error::Domain(_))));
        assert!(matches!(ln_gamma(f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn small_arguments_use_reflection_free_shift() {
        // Γ(0.1) = 9.513507698668731...
        assert!(rel(gamma_real(0.1).unwrap(), 9.513_507_698_668_732) < 1e-13);
    }
}
