//! Two-photon position correlations.
//!
//! Momentum/position entanglement maps onto the spin-½ problem: a detector at
//! coordinate `x` sees the local amplitude `(1/√2)·exp{iαk(x − x₀)/2}`, i.e. a
//! spin-½ amplitude with analyzer angle `αk·x` and internal phase `αk·x₀`.
//! The coincidence probability is the squared amplitude correlation,
//! `½(1 + cos(kα(x₁ − x₂)))`, a fringe of full visibility.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::model::{self, Spin};
use crate::Sign;

/// Smallest sample count accepted by [`visibility`].
pub const MIN_VISIBILITY_SAMPLES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterferenceConfig {
    k: f64,
    alpha: f64,
    x0: f64,
}

impl InterferenceConfig {
    /// `k` is the wave number (must be positive), `alpha` the dimensionless
    /// angular scale. The reference coordinate `x₀` defaults to 0.
    pub fn new(k: f64, alpha: f64) -> Result<InterferenceConfig> {
        if !(k.is_finite() && k > 0.0) {
            return Err(Error::InvalidArgument(format!(
                "wave number k must be positive and finite, got {k}"
            )));
        }
        if !alpha.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "scale factor alpha must be finite, got {alpha}"
            )));
        }
        Ok(InterferenceConfig { k, alpha, x0: 0.0 })
    }

    pub fn with_x0(mut self, x0: f64) -> Result<InterferenceConfig> {
        if !x0.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "x0 must be finite, got {x0}"
            )));
        }
        self.x0 = x0;
        Ok(self)
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn x0(&self) -> f64 {
        self.x0
    }

    /// Fringe period in `x₁ − x₂`: `2π/(kα)`. Infinite when `α = 0`.
    pub fn fringe_period(&self) -> f64 {
        2.0 * PI / (self.k * self.alpha).abs()
    }

    fn detector_angle(&self, x: f64) -> f64 {
        self.alpha * self.k * x
    }
}

/// Probability of a coincidence between detectors at `x1` and `x2`.
pub fn coincidence_probability(cfg: &InterferenceConfig, x1: f64, x2: f64) -> f64 {
    let phase = cfg.detector_angle(cfg.x0);
    let c1 = model::local_amplitude(cfg.detector_angle(x1), phase, Spin::Half, Sign::Plus);
    let c2 = model::local_amplitude(cfg.detector_angle(x2), phase, Spin::Half, Sign::Plus);
    let u = model::pair_product(c1, c2);
    (u * u).clamp(0.0, 1.0)
}

/// Samples one fringe period starting at `x₁ − x₂ = 0`, with `x₂` held at
/// `offset`. Returns `(x₁ − x₂, probability)` pairs.
///
/// The grid always contains both `x₁ − x₂ = 0` and half a period: an even
/// count spans `[0, period)`, an odd count spans `[0, period]`.
pub fn fringe_scan(
    cfg: &InterferenceConfig,
    samples: usize,
    offset: f64,
) -> Result<Vec<(f64, f64)>> {
    if samples < MIN_VISIBILITY_SAMPLES {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_VISIBILITY_SAMPLES} samples per fringe, got {samples}"
        )));
    }
    if cfg.alpha == 0.0 {
        return Err(Error::InvalidArgument(
            "alpha = 0 gives a flat pattern with no fringe period".into(),
        ));
    }
    let period = cfg.fringe_period();
    let divisions = if samples.is_multiple_of(2) {
        samples
    } else {
        samples - 1
    };
    let step = period / divisions as f64;
    Ok((0..samples)
        .map(|j| {
            let delta = j as f64 * step;
            (delta, coincidence_probability(cfg, offset + delta, offset))
        })
        .collect())
}

/// `(max − min)/(max + min)` over one sampled fringe period.
pub fn visibility(cfg: &InterferenceConfig, samples: usize) -> Result<f64> {
    visibility_at(cfg, samples, 0.0)
}

/// As [`visibility`], with both detectors translated by `offset`.
pub fn visibility_at(cfg: &InterferenceConfig, samples: usize, offset: f64) -> Result<f64> {
    let scan = fringe_scan(cfg, samples, offset)?;
    let (min, max) = scan
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &(_, p)| {
            (lo.min(p), hi.max(p))
        });
    Ok((max - min) / (max + min))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{amplitude_correlation, PairConfig};
    use proptest::prelude::*;

    const TOL: f64 = 1e-12;

    fn closed_form(cfg: &InterferenceConfig, x1: f64, x2: f64) -> f64 {
        0.5 * (1.0 + (cfg.k * cfg.alpha * (x1 - x2)).cos())
    }

    #[test]
    fn config_validation() {
        assert!(InterferenceConfig::new(0.0, 1.0).is_err());
        assert!(InterferenceConfig::new(-1.0, 1.0).is_err());
        assert!(InterferenceConfig::new(f64::NAN, 1.0).is_err());
        assert!(InterferenceConfig::new(1.0, f64::INFINITY).is_err());
        assert!(InterferenceConfig::new(1.0, -2.0).is_ok());
        assert!(InterferenceConfig::new(1.0, 1.0)
            .unwrap()
            .with_x0(f64::NAN)
            .is_err());
    }

    #[test]
    fn coincidence_examples() {
        let cfg = InterferenceConfig::new(2.0, 1.5).unwrap();
        assert!((coincidence_probability(&cfg, 0.7, 0.7) - 1.0).abs() <= TOL);
        // kα(x₁ − x₂) = π
        let dark = PI / (cfg.k * cfg.alpha);
        assert!(coincidence_probability(&cfg, dark, 0.0).abs() <= TOL);
        let quarter = 0.5 * PI / (cfg.k * cfg.alpha);
        assert!((coincidence_probability(&cfg, quarter, 0.0) - 0.5).abs() <= TOL);
    }

    #[test]
    fn visibility_examples() {
        let cfg = InterferenceConfig::new(3.0, 0.8).unwrap();
        assert!((visibility(&cfg, 256).unwrap() - 1.0).abs() <= 1e-9);
        assert!((visibility_at(&cfg, 256, 12.5).unwrap() - 1.0).abs() <= 1e-9);

        let one = InterferenceConfig::new(3.0, 1.0).unwrap();
        let two = InterferenceConfig::new(3.0, 2.0).unwrap();
        assert!((two.fringe_period() - one.fringe_period() / 2.0).abs() <= TOL);
        assert!((visibility(&two, 64).unwrap() - visibility(&one, 64).unwrap()).abs() <= 1e-9);
    }

    #[test]
    fn odd_and_even_sample_counts_both_reach_the_dark_fringe() {
        let cfg = InterferenceConfig::new(1.0, 1.0).unwrap();
        for n in 8..40 {
            let v = visibility(&cfg, n).unwrap();
            assert!((v - 1.0).abs() <= 1e-9, "samples = {n}: {v}");
        }
    }

    #[test]
    fn visibility_argument_errors() {
        let cfg = InterferenceConfig::new(1.0, 1.0).unwrap();
        assert!(matches!(
            visibility(&cfg, 7),
            Err(Error::InvalidArgument(_))
        ));
        let flat = InterferenceConfig::new(1.0, 0.0).unwrap();
        assert!(visibility(&flat, 64).is_err());
        // still well defined pointwise
        assert_eq!(coincidence_probability(&flat, 3.0, -1.0), 1.0);
    }

    proptest! {
        #[test]
        fn matches_closed_form_and_stays_in_range(
            k in 0.01..20.0f64, alpha in -5.0..5.0f64,
            x1 in -10.0..10.0f64, x2 in -10.0..10.0f64,
        ) {
            let cfg = InterferenceConfig::new(k, alpha).unwrap();
            let p = coincidence_probability(&cfg, x1, x2);
            prop_assert!((0.0..=1.0).contains(&p));
            prop_assert!((p - closed_form(&cfg, x1, x2)).abs() <= 1e-11);
        }

        #[test]
        fn translation_and_reference_invariance(
            k in 0.01..5.0f64, alpha in -3.0..3.0f64,
            x1 in -5.0..5.0f64, x2 in -5.0..5.0f64,
            shift in -5.0..5.0f64, x0 in -5.0..5.0f64,
        ) {
            let cfg = InterferenceConfig::new(k, alpha).unwrap();
            let moved = cfg.with_x0(x0).unwrap();
            let p = coincidence_probability(&cfg, x1, x2);
            prop_assert!((p - coincidence_probability(&cfg, x1 + shift, x2 + shift)).abs() <= 1e-11);
            prop_assert!((p - coincidence_probability(&moved, x1, x2)).abs() <= 1e-11);
        }

        #[test]
        fn equals_spin_half_coincidence_mass(
            k in 0.01..5.0f64, alpha in -3.0..3.0f64,
            x1 in -5.0..5.0f64, x2 in -5.0..5.0f64,
        ) {
            let cfg = InterferenceConfig::new(k, alpha).unwrap();
            let pair = PairConfig::new(Spin::Half, 0.0, alpha * k * x1, alpha * k * x2).unwrap();
            let u = amplitude_correlation(&pair);
            prop_assert!((coincidence_probability(&cfg, x1, x2) - u * u).abs() <= TOL);
        }
    }
}
