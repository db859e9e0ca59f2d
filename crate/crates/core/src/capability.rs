//! Outlier-handling capability of a code from its m-height profile.
//!
//! A code locates `τ` outliers and detects `τ + σ` of them under noise
//! bounded by `δ` and outliers above `Δ` iff `Δ/δ ≥ 2(h_{2τ+σ} + 1)`.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::height::{Height, MHeightProfile};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CapabilitySpec {
    pub tau: usize,
    pub sigma: usize,
    /// Bound on every entry of the limited-magnitude noise.
    pub delta: f64,
    /// Magnitude above which an entry counts as an outlier.
    #[serde(rename = "Delta")]
    pub big_delta: f64,
}

impl CapabilitySpec {
    pub fn new(tau: usize, sigma: usize, delta: f64, big_delta: f64) -> Result<Self> {
        let spec = CapabilitySpec {
            tau,
            sigma,
            delta,
            big_delta,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.delta > 0.0 && self.delta.is_finite()) {
            return Err(invalid(format!(
                "delta = {} must be positive and finite",
                self.delta
            )));
        }
        if !(self.big_delta > self.delta && self.big_delta.is_finite()) {
            return Err(invalid(format!(
                "Delta = {} must be finite and exceed delta = {}",
                self.big_delta, self.delta
            )));
        }
        Ok(())
    }

    /// `2τ + σ`, the m-height index the condition reads.
    pub fn order(&self) -> usize {
        2 * self.tau + self.sigma
    }

    pub fn ratio(&self) -> f64 {
        self.big_delta / self.delta
    }
}

/// Smallest `Δ/δ` that supports a code with m-height `h`: `2(h + 1)`.
pub fn required_ratio(h: Height) -> Result<f64> {
    match h {
        Height::Finite(v) => Ok(2.0 * (v + 1.0)),
        Height::Infinite => Err(Error::NoFiniteRatio),
    }
}

/// Every `(τ, σ) ≠ (0, 0)` supported at `ratio`, by descending `τ` then `σ`.
pub fn feasible_pairs(profile: &MHeightProfile, ratio: f64) -> Vec<(usize, usize)> {
    let top = profile.n() - 1;
    let mut pairs = Vec::new();
    for tau in (0..=top / 2).rev() {
        for sigma in (0..=top - 2 * tau).rev() {
            let m = 2 * tau + sigma;
            if m == 0 {
                continue;
            }
            let h = profile.heights()[m - 1].value;
            if required_ratio(h).is_ok_and(|r| r <= ratio) {
                pairs.push((tau, sigma));
            }
        }
    }
    pairs
}

/// Whether `profile` meets `spec`; an infinite `h_{2τ+σ}` is never met.
pub fn check_spec(profile: &MHeightProfile, spec: &CapabilitySpec) -> Result<bool> {
    spec.validate()?;
    let m = spec.order();
    if m == 0 {
        return Err(invalid("tau = sigma = 0 makes no claim"));
    }
    let h = profile.get(m)?.value;
    Ok(required_ratio(h).is_ok_and(|r| spec.ratio() >= r))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CapabilityReport {
    pub ratio: f64,
    pub pairs: Vec<(usize, usize)>,
}

impl CapabilityReport {
    pub fn new(profile: &MHeightProfile, ratio: f64) -> Self {
        CapabilityReport {
            ratio,
            pairs: feasible_pairs(profile, ratio),
        }
    }
}
