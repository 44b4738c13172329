//! Closed algebra of radial functions `f(r) = Σ_k c_k r^(α+k) e^(-κr)`.
//!
//! Every analytic object in the solver (ground states, raising chains,
//! Hamiltonian images) lives in this algebra. Coefficients are stored densely
//! by integer offset `k` from the base exponent `α`. In canonical form the
//! first and last stored coefficients are nonzero, so `α` is always the lowest
//! power of `r` actually present.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::tolerances::{COEFF_TRIM, EXPONENT_INTEGRALITY, KAPPA_MATCH};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "Repr", try_from = "Repr")]
pub struct QuasiPolynomial {
    alpha: f64,
    coeffs: Vec<f64>,
    kappa: f64,
}

/// Wire form: `{"alpha": .., "kappa": .., "coeffs": [[k, c], ...]}`.
#[derive(Serialize, Deserialize)]
struct Repr {
    alpha: f64,
    kappa: f64,
    coeffs: Vec<(usize, f64)>,
}

impl From<QuasiPolynomial> for Repr {
    fn from(f: QuasiPolynomial) -> Self {
        Repr {
            alpha: f.alpha,
            kappa: f.kappa,
            coeffs: f.terms().collect(),
        }
    }
}

impl TryFrom<Repr> for QuasiPolynomial {
    type Error = Error;

    fn try_from(r: Repr) -> Result<Self> {
        QuasiPolynomial::new(r.alpha, r.coeffs, r.kappa)
    }
}

fn check_kappa(kappa: f64) -> Result<()> {
    if kappa > 0.0 && kappa.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("decay rate must be positive, got {kappa}")))
    }
}

impl QuasiPolynomial {
    /// Builds `Σ c_k r^(alpha+k) e^(-kappa r)` from `(k, c_k)` pairs.
    /// Repeated offsets are summed.
    pub fn new(
        alpha: f64,
        terms: impl IntoIterator<Item = (usize, f64)>,
        kappa: f64,
    ) -> Result<Self> {
        check_kappa(kappa)?;
        if !alpha.is_finite() {
            return Err(Error::Domain(format!("base exponent must be finite, got {alpha}")));
        }
        let mut raw = Vec::new();
        for (k, c) in terms {
            if !c.is_finite() {
                return Err(Error::Domain(format!("coefficient {k} is not finite")));
            }
            if raw.len() <= k {
                raw.resize(k + 1, 0.0);
            }
            raw[k] += c;
        }
        Ok(Self::assemble(alpha, raw, kappa, 0.0, true))
    }

    /// Single term `c r^alpha e^(-kappa r)`.
    pub fn monomial(alpha: f64, c: f64, kappa: f64) -> Result<Self> {
        Self::new(alpha, [(0, c)], kappa)
    }

    /// Builds from a dense coefficient list, `coeffs[k]` multiplying `r^(alpha+k)`.
    pub fn from_dense(alpha: f64, coeffs: Vec<f64>, kappa: f64) -> Result<Self> {
        Self::new(alpha, coeffs.into_iter().enumerate(), kappa)
    }

    /// The zero function with decay `kappa`.
    pub fn zero(kappa: f64) -> Result<Self> {
        check_kappa(kappa)?;
        Ok(Self { alpha: 0.0, coeffs: Vec::new(), kappa })
    }

    /// Canonicalizes raw coefficients. With `trim`, entries at or below
    /// `COEFF_TRIM * max(scale, max|c|)` are dropped; `scale` carries the
    /// magnitude of the terms that were combined to produce `raw`.
    pub(crate) fn assemble(alpha: f64, mut raw: Vec<f64>, kappa: f64, scale: f64, trim: bool) -> Self {
        if trim {
            let peak = raw.iter().fold(scale, |m, c| m.max(c.abs()));
            let threshold = COEFF_TRIM * peak;
            for c in raw.iter_mut() {
                if c.abs() <= threshold {
                    *c = 0.0;
                }
            }
        }
        while raw.last() == Some(&0.0) {
            raw.pop();
        }
        let lead = raw.iter().take_while(|c| **c == 0.0).count();
        if lead == raw.len() {
            return Self { alpha, coeffs: Vec::new(), kappa };
        }
        raw.drain(..lead);
        Self { alpha: alpha + lead as f64, coeffs: raw, kappa }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Dense coefficients, `coeffs()[k]` multiplying `r^(alpha+k)`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Nonzero `(k, c_k)` pairs in increasing order of `k`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.coeffs.iter().copied().enumerate().filter(|(_, c)| *c != 0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms().count()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Coefficient of the lowest power of `r` (zero for the zero function).
    pub fn lowest_coeff(&self) -> f64 {
        self.coeffs.first().copied().unwrap_or(0.0)
    }

    /// Coefficient of `r^power`, zero if `power` is not on this function's ladder.
    pub fn coeff_of_power(&self, power: f64) -> f64 {
        let offset = power - self.alpha;
        let k = offset.round();
        if (offset - k).abs() > EXPONENT_INTEGRALITY || k < 0.0 {
            return 0.0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0.0)
    }

    fn integer_offset(from: f64, to: f64) -> Result<i64> {
        let d = to - from;
        let k = d.round();
        if (d - k).abs() > EXPONENT_INTEGRALITY * (1.0 + from.abs().max(to.abs())) {
            return Err(Error::IncompatibleExponent { left: from, right: to });
        }
        Ok(k as i64)
    }

    fn same_kappa(a: f64, b: f64) -> bool {
        (a - b).abs() <= KAPPA_MATCH * a.abs().max(b.abs())
    }

    /// Pointwise sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if !Self::same_kappa(self.kappa, other.kappa) {
            return Err(Error::IncompatibleDecay { left: self.kappa, right: other.kappa });
        }
        let shift = Self::integer_offset(self.alpha, other.alpha)?;
        let (base, lo, hi, hi_off) = if shift >= 0 {
            (self.alpha, self, other, shift as usize)
        } else {
            (other.alpha, other, self, (-shift) as usize)
        };
        let len = lo.coeffs.len().max(hi.coeffs.len() + hi_off);
        let mut raw = vec![0.0; len];
        for (k, c) in lo.coeffs.iter().enumerate() {
            raw[k] += c;
        }
        for (k, c) in hi.coeffs.iter().enumerate() {
            raw[k + hi_off] += c;
        }
        let scale = self.max_abs_coeff().max(other.max_abs_coeff());
        Ok(Self::assemble(base, raw, self.kappa, scale, true))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-1.0))
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: f64) -> Self {
        if c == 0.0 {
            return Self { alpha: self.alpha, coeffs: Vec::new(), kappa: self.kappa };
        }
        Self {
            alpha: self.alpha,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
            kappa: self.kappa,
        }
    }

    /// Multiplies by `r^p`.
    pub fn shift_power(&self, p: i32) -> Self {
        Self {
            alpha: self.alpha + f64::from(p),
            coeffs: self.coeffs.clone(),
            kappa: self.kappa,
        }
    }

    /// Exact derivative with respect to `r`.
    pub fn differentiate(&self) -> Self {
        let mut raw = vec![0.0; self.coeffs.len() + 1];
        let mut scale: f64 = 0.0;
        for (k, &c) in self.coeffs.iter().enumerate() {
            let power_term = c * (self.alpha + k as f64);
            let decay_term = -self.kappa * c;
            raw[k] += power_term;
            raw[k + 1] += decay_term;
            scale = scale.max(power_term.abs()).max(decay_term.abs());
        }
        Self::assemble(self.alpha - 1.0, raw, self.kappa, scale, true)
    }

    /// `-f''/2 + L(L+1)/(2r^2) f - (gamma/r) f`.
    pub fn apply_radial_hamiltonian(&self, l: f64, gamma: f64) -> Self {
        let kinetic = self.differentiate().differentiate().scale(-0.5);
        let centrifugal = self.shift_power(-2).scale(0.5 * l * (l + 1.0));
        let coulomb = self.shift_power(-1).scale(-gamma);
        // All three pieces share kappa and sit on the same integer ladder.
        kinetic
            .add(&centrifugal)
            .and_then(|s| s.add(&coulomb))
            .expect("terms of one function are always compatible")
    }

    /// `∫_0^∞ f(r) g(r) dr`, evaluated term by term with Gamma integrals.
    pub fn inner_product(&self, other: &Self) -> Result<f64> {
        let decay = self.kappa + other.kappa;
        let ln_decay = decay.ln();
        let mut sum = 0.0;
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                let beta = self.alpha + other.alpha + (i + j) as f64;
                if beta <= -1.0 {
                    return Err(Error::DivergentIntegral { power: beta });
                }
                let log_mag = ln_gamma(beta + 1.0)? - (beta + 1.0) * ln_decay;
                sum += a * b * log_mag.exp();
            }
        }
        Ok(sum)
    }

    /// `⟨f, f⟩`.
    pub fn norm_squared(&self) -> Result<f64> {
        self.inner_product(self)
    }

    /// Point value at `r >= 0`. `r = 0` is allowed only when no negative power is present.
    pub fn evaluate(&self, r: f64) -> Result<f64> {
        if r < 0.0 || r.is_nan() {
            return Err(Error::Domain(format!("evaluation requires r >= 0, got {r}")));
        }
        if self.is_zero() {
            return Ok(0.0);
        }
        if r == 0.0 {
            return if self.alpha < 0.0 {
                Err(Error::Domain(format!(
                    "r = 0 with negative power r^{}",
                    self.alpha
                )))
            } else if self.alpha == 0.0 {
                Ok(self.coeffs[0])
            } else {
                Ok(0.0)
            };
        }
        let poly = self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c);
        Ok(poly * (self.alpha * r.ln() - self.kappa * r).exp())
    }

    /// Strictly positive roots of the polynomial factor, ascending.
    ///
    /// Sign changes are located on a mixed logarithmic/uniform grid up to the
    /// Cauchy bound and refined by bisection.
    pub fn positive_roots(&self) -> Vec<f64> {
        let terms: Vec<f64> = self.coeffs.clone();
        if terms.len() < 2 {
            return Vec::new();
        }
        let lead = *terms.last().unwrap();
        let bound = 1.0
            + terms[..terms.len() - 1]
                .iter()
                .fold(0.0_f64, |m, c| m.max((c / lead).abs()));
        let poly = |r: f64| terms.iter().rev().fold(0.0, |acc, c| acc * r + c);

        let mut grid: Vec<f64> = Vec::with_capacity(24_000);
        let decades = 14.0;
        for i in 0..=4000 {
            grid.push(bound * 10f64.powf(-decades + decades * i as f64 / 4000.0));
        }
        for i in 1..=20_000 {
            grid.push(bound * i as f64 / 20_000.0);
        }
        grid.sort_by(f64::total_cmp);
        grid.dedup();

        let mut roots = Vec::new();
        let mut prev_r = grid[0];
        let mut prev_v = poly(prev_r);
        for &r in &grid[1..] {
            let v = poly(r);
            if v == 0.0 {
                roots.push(r);
            } else if prev_v != 0.0 && (v > 0.0) != (prev_v > 0.0) {
                let (mut a, mut b, mut fa) = (prev_r, r, prev_v);
                for _ in 0..200 {
                    let mid = 0.5 * (a + b);
                    if mid <= a || mid >= b {
                        break;
                    }
                    let fm = poly(mid);
                    if (fm > 0.0) == (fa > 0.0) {
                        a = mid;
                        fa = fm;
                    } else {
                        b = mid;
                    }
                }
                roots.push(0.5 * (a + b));
            }
            prev_r = r;
            prev_v = v;
        }
        roots
    }

    /// Max coefficient deviation between `self` and `other`, relative to the
    /// larger of the two coefficient max-norms. Zero when both vanish; infinite
    /// when the functions are not on a common ladder with a common decay.
    pub fn relative_distance(&self, other: &Self) -> f64 {
        if self.is_zero() && other.is_zero() {
            return 0.0;
        }
        if self.is_zero() || other.is_zero() {
            return 1.0;
        }
        match self.sub(other) {
            Ok(diff) => {
                let scale = self.max_abs_coeff().max(other.max_abs_coeff());
                diff.max_abs_coeff() / scale
            }
            Err(_) => f64::INFINITY,
        }
    }

    /// `relative_distance` minimized over the global sign of `other`.
    pub fn relative_distance_up_to_sign(&self, other: &Self) -> f64 {
        self.relative_distance(other)
            .min(self.relative_distance(&other.scale(-1.0)))
    }
}
