//! Local amplitudes and correlation functions for maximally entangled pairs.
//!
//! A particle meeting an analyzer at angle `θ` carries the amplitude
//! `C₊ = (1/√2)·exp{i·s·(θ − φ)}` for transmission, where `φ` is the internal
//! phase it received at the source and `s` its spin. The amplitude for the
//! orthogonal outcome is `C₋ = i·C₊`. The two particles of a pair differ in
//! internal phase by the constant offset `φ₀`; the individual phases are
//! never observable.
//!
//! Correlations are always computed from the amplitude product; the closed
//! forms `cos{s(θ₁ − θ₂) + sφ₀}` and `−cos(θ₁ − θ₂)` only appear in tests.

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::Sign;

/// Slack allowed on `|u| ≤ 1` before a value is rejected; rounding in the
/// amplitude product can overshoot the unit interval by a few ulps.
const UNIT_SLACK: f64 = 1e-12;

/// Normalization of the pair amplitude correlation, `U = N·Re(C₁C₂*)`.
const PAIR_NORMALIZATION: f64 = 2.0;

/// Spin quantum number of the analysed particles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    /// Spin-½ (electrons, neutrons, the Bohm singlet).
    Half,
    /// Spin-1 (photons).
    One,
}

impl Spin {
    pub fn value(self) -> f64 {
        match self {
            Spin::Half => 0.5,
            Spin::One => 1.0,
        }
    }

    /// Accepts exactly `1/2` or `1`.
    pub fn from_ratio(numerator: u32, denominator: u32) -> Result<Spin> {
        match (numerator, denominator) {
            (n, d) if d != 0 && 2 * n == d => Ok(Spin::Half),
            (n, d) if d != 0 && n == d => Ok(Spin::One),
            _ => Err(Error::InvalidArgument(format!(
                "spin {numerator}/{denominator} is not supported (expected 1/2 or 1)"
            ))),
        }
    }

    pub fn from_f64(value: f64) -> Result<Spin> {
        if value == 0.5 {
            Ok(Spin::Half)
        } else if value == 1.0 {
            Ok(Spin::One)
        } else {
            Err(Error::InvalidArgument(format!(
                "spin {value} is not supported (expected 0.5 or 1)"
            )))
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Spin::Half => f.write_str("1/2"),
            Spin::One => f.write_str("1"),
        }
    }
}

/// One particle's local measurement amplitude, modulus `1/√2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalAmplitude(Complex64);

impl LocalAmplitude {
    pub fn value(self) -> Complex64 {
        self.0
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    /// Local outcome probability `C·C*`.
    pub fn probability(self) -> f64 {
        self.0.norm_sqr()
    }
}

/// Everything needed for one two-particle correlation point.
///
/// Angles are radians and unrestricted; periodicity is handled by the
/// trigonometry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairConfig {
    pub spin: Spin,
    /// Source phase offset `φ₀ = φ₂ − φ₁`.
    pub phi0: f64,
    pub theta1: f64,
    pub theta2: f64,
}

impl PairConfig {
    pub fn new(spin: Spin, phi0: f64, theta1: f64, theta2: f64) -> Result<PairConfig> {
        for (what, v) in [("phi0", phi0), ("theta1", theta1), ("theta2", theta2)] {
            if !v.is_finite() {
                return Err(Error::InvalidArgument(format!(
                    "{what} must be finite, got {v}"
                )));
            }
        }
        Ok(PairConfig {
            spin,
            phi0,
            theta1,
            theta2,
        })
    }

    /// Spin-½ singlet: `φ₀ = π`.
    pub fn singlet(theta1: f64, theta2: f64) -> PairConfig {
        PairConfig {
            spin: Spin::Half,
            phi0: PI,
            theta1,
            theta2,
        }
    }

    /// Photons entangled in orthogonal polarizations: `s = 1`, `φ₀ = π/2`.
    pub fn photon(theta1: f64, theta2: f64) -> PairConfig {
        PairConfig {
            spin: Spin::One,
            phi0: FRAC_PI_2,
            theta1,
            theta2,
        }
    }
}

/// Joint outcome probabilities for one pair configuration, together with the
/// amplitude correlation `u` and the experimenter's correlation `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JointDistribution {
    pub u: f64,
    pub p: f64,
    pub p_pp: f64,
    pub p_mm: f64,
    pub p_pm: f64,
    pub p_mp: f64,
}

impl JointDistribution {
    pub fn probability(&self, first: Sign, second: Sign) -> f64 {
        match (first, second) {
            (Sign::Plus, Sign::Plus) => self.p_pp,
            (Sign::Minus, Sign::Minus) => self.p_mm,
            (Sign::Plus, Sign::Minus) => self.p_pm,
            (Sign::Minus, Sign::Plus) => self.p_mp,
        }
    }

    pub fn coincidence(&self) -> f64 {
        self.p_pp + self.p_mm
    }

    pub fn anticoincidence(&self) -> f64 {
        self.p_pm + self.p_mp
    }

    pub fn total(&self) -> f64 {
        self.p_pp + self.p_mm + self.p_pm + self.p_mp
    }

    /// Probability of `+` at the first analyzer, whatever the second reads.
    pub fn first_plus(&self) -> f64 {
        self.p_pp + self.p_pm
    }

    /// Probability of `+` at the second analyzer, whatever the first reads.
    pub fn second_plus(&self) -> f64 {
        self.p_pp + self.p_mp
    }
}

/// `(1/√2)·exp{i·s·(θ − φ)}` for `+`, rotated by `π/2` for `−`.
pub fn local_amplitude(theta: f64, phi: f64, spin: Spin, outcome: Sign) -> LocalAmplitude {
    let phase = spin.value() * (theta - phi);
    let plus = Complex64::from_polar(FRAC_1_SQRT_2, phase);
    match outcome {
        Sign::Plus => LocalAmplitude(plus),
        Sign::Minus => LocalAmplitude(plus * Complex64::i()),
    }
}

/// `N·Re(C₁·C₂*)` with `N = 2`.
pub fn pair_product(first: LocalAmplitude, second: LocalAmplitude) -> f64 {
    PAIR_NORMALIZATION * (first.0 * second.0.conj()).re
}

/// Amplitude correlation `U` for the `(++)` / `(−−)` outcome, with the first
/// particle's internal phase set to `phi1` and the second's to `phi1 + φ₀`.
///
/// The result does not depend on `phi1`.
pub fn amplitude_correlation_with_phase(config: &PairConfig, phi1: f64) -> f64 {
    let phi2 = phi1 + config.phi0;
    let c1 = local_amplitude(config.theta1, phi1, config.spin, Sign::Plus);
    let c2 = local_amplitude(config.theta2, phi2, config.spin, Sign::Plus);
    pair_product(c1, c2).clamp(-1.0, 1.0)
}

/// Amplitude correlation `U = 2·Re(C₁C₂*) = cos{s(θ₁ − θ₂) + sφ₀}`.
pub fn amplitude_correlation(config: &PairConfig) -> f64 {
    amplitude_correlation_with_phase(config, 0.0)
}

fn check_unit(what: &'static str, u: f64) -> Result<f64> {
    if u.is_nan() || u.abs() > 1.0 + UNIT_SLACK {
        return Err(Error::Domain {
            what,
            value: u,
            domain: "[-1, 1]",
        });
    }
    Ok(u.clamp(-1.0, 1.0))
}

/// Experimenter's correlation `P = 2U² − 1`: coincidence minus
/// anticoincidence probability.
pub fn experimenter_correlation(u: f64) -> Result<f64> {
    let u = check_unit("u", u)?;
    Ok(2.0 * u * u - 1.0)
}

/// Splits the coincidence mass `u²` evenly between `(++)` and `(−−)` and the
/// anticoincidence mass `1 − u²` evenly between `(+−)` and `(−+)`.
pub fn joint_probabilities(u: f64) -> Result<JointDistribution> {
    let u = check_unit("u", u)?;
    let coincidence = u * u;
    let anticoincidence = 1.0 - coincidence;
    Ok(JointDistribution {
        u,
        p: coincidence - anticoincidence,
        p_pp: coincidence / 2.0,
        p_mm: coincidence / 2.0,
        p_pm: anticoincidence / 2.0,
        p_mp: anticoincidence / 2.0,
    })
}

/// Full joint distribution for an arbitrary pair configuration.
pub fn correlate(config: &PairConfig) -> JointDistribution {
    let u = amplitude_correlation(config);
    joint_probabilities(u).expect("amplitude correlation is clamped to [-1, 1]")
}

/// Spin-½ singlet at analyzer angles `θ₁`, `θ₂`; `P = −cos(θ₁ − θ₂)`.
pub fn singlet_correlation(theta1: f64, theta2: f64) -> JointDistribution {
    correlate(&PairConfig::singlet(theta1, theta2))
}

/// Polarization-entangled photons; `P = −cos(2(θ₁ − θ₂))`.
pub fn photon_correlation(theta1: f64, theta2: f64) -> JointDistribution {
    correlate(&PairConfig::photon(theta1, theta2))
}
