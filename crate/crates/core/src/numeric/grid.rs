use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Uniform interior nodes `r_i = i h`, `i = 1..=n`, with `h = r_max/(n+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    r_max: f64,
    n: usize,
}

impl RadialGrid {
    pub const MIN_POINTS: usize = 16;

    pub fn new(r_max: f64, n: usize) -> Result<Self> {
        if !(r_max > 0.0) || !r_max.is_finite() {
            return Err(Error::InvalidArgument(format!("r_max must be positive, got {r_max}")));
        }
        if n < Self::MIN_POINTS {
            return Err(Error::InvalidArgument(format!(
                "grid needs at least {} interior points, got {n}",
                Self::MIN_POINTS
            )));
        }
        Ok(Self { r_max, n })
    }

    /// Grid for level `N` with the default extent `30 N / γ`.
    pub fn for_level(n_level: f64, gamma: f64, n: usize) -> Result<Self> {
        Self::new(30.0 * n_level / gamma, n)
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn spacing(&self) -> f64 {
        self.r_max / (self.n + 1) as f64
    }

    /// `r_i` for `i` in `1..=n`.
    pub fn node(&self, i: usize) -> f64 {
        i as f64 * self.spacing()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        let h = self.spacing();
        (1..=self.n).map(move |i| i as f64 * h)
    }
}
