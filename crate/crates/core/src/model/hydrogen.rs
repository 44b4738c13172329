//! Integer-`L` limit: the analytic chain must reproduce the textbook
//! hydrogen-like radial functions with nuclear charge `γ`.

use serde::Serialize;

use crate::error::Result;
use crate::susy::{build_u, radial_r};
use crate::tolerances::HYDROGEN_LIMIT;

/// Generalized Laguerre polynomial `L_k^(a)(x)` by three-term recurrence.
fn laguerre(k: u32, a: f64, x: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 1.0 + a - x;
    for j in 1..k {
        let j = f64::from(j);
        let next = ((2.0 * j + 1.0 + a - x) * cur - (j + a) * prev) / (j + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn factorial(n: u32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Textbook `R_{nl}(r)` for charge `z`:
/// `√((2z/n)³ (n−l−1)!/(2n (n+l)!)) e^{−ρ/2} ρ^l L_{n−l−1}^{(2l+1)}(ρ)`, `ρ = 2zr/n`.
pub fn hydrogen_radial_oracle(n: u32, l: u32, z: f64, r: f64) -> f64 {
    assert!(l < n, "hydrogen oracle needs l < n");
    let nf = f64::from(n);
    let rho = 2.0 * z * r / nf;
    let norm = ((2.0 * z / nf).powi(3) * factorial(n - l - 1) / (2.0 * nf * factorial(n + l))).sqrt();
    norm * (-0.5 * rho).exp() * rho.powi(l as i32) * laguerre(n - l - 1, f64::from(2 * l + 1), rho)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HydrogenLimitEntry {
    pub n: u32,
    pub l: u32,
    pub max_relative_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HydrogenLimitReport {
    pub gamma: f64,
    pub entries: Vec<HydrogenLimitEntry>,
}

impl HydrogenLimitReport {
    pub fn max_deviation(&self) -> f64 {
        self.entries.iter().map(|e| e.max_relative_deviation).fold(0.0, f64::max)
    }

    pub fn passed(&self) -> bool {
        self.max_deviation() <= HYDROGEN_LIMIT
    }
}

const SAMPLES: usize = 400;

/// Compares `R_{N,L}` from the raising chain with the Laguerre form for
/// `L ∈ {0, 1, 2}`, `N ≤ 3`, sampled on `(0, 40N/γ]`. Deviations are taken
/// relative to the oracle's max-norm and minimized over a global sign.
pub fn hydrogen_limit_check(gamma: f64) -> Result<HydrogenLimitReport> {
    let mut entries = Vec::new();
    for n in 1..=3u32 {
        for l in 0..n.min(3) {
            let radial = radial_r(&build_u(f64::from(n), f64::from(l), gamma)?);
            let r_max = 40.0 * f64::from(n) / gamma;
            let mut peak: f64 = 0.0;
            let (mut same, mut flipped): (f64, f64) = (0.0, 0.0);
            for i in 1..=SAMPLES {
                let r = r_max * i as f64 / SAMPLES as f64;
                let analytic = radial.evaluate(r)?;
                let oracle = hydrogen_radial_oracle(n, l, gamma, r);
                peak = peak.max(oracle.abs());
                same = same.max((analytic - oracle).abs());
                flipped = flipped.max((analytic + oracle).abs());
            }
            entries.push(HydrogenLimitEntry {
                n,
                l,
                max_relative_deviation: same.min(flipped) / peak,
            });
        }
    }
    Ok(HydrogenLimitReport { gamma, entries })
}
