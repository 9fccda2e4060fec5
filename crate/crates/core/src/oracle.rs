//! Reference quantum mechanics: dense state vectors, single-particle
//! projectors and the Born rule.
//!
//! This module deliberately shares no computation with [`crate::model`] or
//! [`crate::ghz`]; it is the ground truth those modules are checked against.
//!
//! Basis ordering: particle 1 is the most significant bit of the basis
//! index, and `+` (bit 0) precedes `−` (bit 1). For two particles the order
//! is `|++⟩, |+−⟩, |−+⟩, |−−⟩`.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::Sign;

const NORM_TOL: f64 = 1e-12;

/// Normalized vector of `2ⁿ` complex amplitudes.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<Complex64>,
    particles: usize,
}

impl StateVector {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<StateVector> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::InvalidArgument(format!(
                "state vector length must be 2^n with n >= 1, got {len}"
            )));
        }
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if norm.is_nan() || (norm - 1.0).abs() > NORM_TOL {
            return Err(Error::InvalidArgument(format!(
                "state vector is not normalized: Σ|a|² = {norm}"
            )));
        }
        Ok(StateVector {
            amplitudes,
            particles: len.trailing_zeros() as usize,
        })
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Amplitude of the z-basis state with the given signs.
    pub fn amplitude(&self, signs: &[Sign]) -> Result<Complex64> {
        Ok(self.amplitudes[self.index_of(signs)?])
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    fn index_of(&self, signs: &[Sign]) -> Result<usize> {
        if signs.len() != self.particles {
            return Err(Error::InvalidArgument(format!(
                "{} signs given for a {}-particle state",
                signs.len(),
                self.particles
            )));
        }
        Ok(signs
            .iter()
            .fold(0, |idx, s| (idx << 1) | usize::from(*s == Sign::Minus)))
    }
}

/// `(1/√2)(|+−⟩ − |−+⟩)`.
pub fn singlet_state() -> StateVector {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let z = Complex64::new(0.0, 0.0);
    StateVector::new(vec![z, h, -h, z]).expect("singlet is normalized")
}

/// `(1/√2)(|+++⟩ − |−−−⟩)`.
pub fn ghz_state() -> StateVector {
    let mut amps = vec![Complex64::new(0.0, 0.0); 8];
    amps[0] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    amps[7] = Complex64::new(-FRAC_1_SQRT_2, 0.0);
    StateVector::new(amps).expect("GHZ state is normalized")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AnalyzerKind {
    /// Stern-Gerlach analyzer for a spin-½ particle.
    SpinHalf,
    /// Linear polarizer; its projector uses twice the physical angle.
    PhotonPolarization,
}

/// Analyzer direction in the x–z plane, measured from z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSetting {
    pub angle: f64,
    pub kind: AnalyzerKind,
}

impl MeasurementSetting {
    pub fn spin_half(angle: f64) -> MeasurementSetting {
        MeasurementSetting {
            angle,
            kind: AnalyzerKind::SpinHalf,
        }
    }

    pub fn photon(angle: f64) -> MeasurementSetting {
        MeasurementSetting {
            angle,
            kind: AnalyzerKind::PhotonPolarization,
        }
    }

    /// Analyzer along x for a spin-½ particle.
    pub fn x_axis() -> MeasurementSetting {
        MeasurementSetting::spin_half(std::f64::consts::FRAC_PI_2)
    }

    fn bloch_angle(&self) -> f64 {
        match self.kind {
            AnalyzerKind::SpinHalf => self.angle,
            AnalyzerKind::PhotonPolarization => 2.0 * self.angle,
        }
    }

    /// `(I ± (cosθ·σz + sinθ·σx))/2`.
    pub fn projector(&self, outcome: Sign) -> Operator2 {
        let t = self.bloch_angle();
        let sign = f64::from(outcome.value());
        let (c, s) = (t.cos(), t.sin());
        let identity = Operator2::identity();
        let direction = Operator2::pauli_z()
            .scale(c)
            .add(&Operator2::pauli_x().scale(s));
        identity.add(&direction.scale(sign)).scale(0.5)
    }
}

/// Dense single-particle operator, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Operator2(pub [[Complex64; 2]; 2]);

impl Operator2 {
    fn real(m: [[f64; 2]; 2]) -> Operator2 {
        Operator2(m.map(|row| row.map(|x| Complex64::new(x, 0.0))))
    }

    pub fn identity() -> Operator2 {
        Operator2::real([[1.0, 0.0], [0.0, 1.0]])
    }

    pub fn pauli_x() -> Operator2 {
        Operator2::real([[0.0, 1.0], [1.0, 0.0]])
    }

    pub fn pauli_z() -> Operator2 {
        Operator2::real([[1.0, 0.0], [0.0, -1.0]])
    }

    pub fn scale(&self, k: f64) -> Operator2 {
        Operator2(self.0.map(|row| row.map(|x| x * k)))
    }

    pub fn add(&self, other: &Operator2) -> Operator2 {
        let mut out = self.0;
        for (r, row) in out.iter_mut().enumerate() {
            for (c, x) in row.iter_mut().enumerate() {
                *x += other.0[r][c];
            }
        }
        Operator2(out)
    }
}

/// Applies `op` to particle `particle` (0-based, 0 = most significant bit).
fn apply_local(amps: &mut [Complex64], particles: usize, particle: usize, op: &Operator2) {
    let stride = 1usize << (particles - 1 - particle);
    for base in 0..amps.len() {
        if base & stride != 0 {
            continue;
        }
        let (a0, a1) = (amps[base], amps[base | stride]);
        amps[base] = op.0[0][0] * a0 + op.0[0][1] * a1;
        amps[base | stride] = op.0[1][0] * a0 + op.0[1][1] * a1;
    }
}

/// `‖(Π₁ ⊗ … ⊗ Πₙ)|ψ⟩‖²` for the projectors onto the given outcomes.
pub fn joint_probability(
    state: &StateVector,
    settings: &[MeasurementSetting],
    outcomes: &[Sign],
) -> Result<f64> {
    let n = state.particles();
    if settings.len() != n || outcomes.len() != n {
        return Err(Error::InvalidArgument(format!(
            "{n}-particle state needs {n} settings and {n} outcomes, got {} and {}",
            settings.len(),
            outcomes.len()
        )));
    }
    let mut projected = state.amplitudes.clone();
    for (particle, (setting, outcome)) in settings.iter().zip(outcomes).enumerate() {
        apply_local(&mut projected, n, particle, &setting.projector(*outcome));
    }
    Ok(projected.iter().map(|a| a.norm_sqr()).sum())
}

/// Every outcome tuple (in basis order) with its Born probability.
pub fn outcome_distribution(
    state: &StateVector,
    settings: &[MeasurementSetting],
) -> Result<Vec<(Vec<Sign>, f64)>> {
    let n = state.particles();
    (0..1usize << n)
        .map(|idx| {
            let signs: Vec<Sign> = (0..n)
                .map(|p| {
                    if (idx >> (n - 1 - p)) & 1 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                })
                .collect();
            let p = joint_probability(state, settings, &signs)?;
            Ok((signs, p))
        })
        .collect()
}

/// `Σ (Π sᵢ)·P(s₁…sₙ)`, the expectation of the product of outcomes.
pub fn product_expectation(state: &StateVector, settings: &[MeasurementSetting]) -> Result<f64> {
    Ok(outcome_distribution(state, settings)?
        .into_iter()
        .map(|(signs, p)| f64::from(signs.iter().map(|s| s.value()).product::<i32>()) * p)
        .sum())
}

/// Two-particle correlation `E = Σ s₁s₂·P(s₁, s₂)`.
pub fn correlation(state: &StateVector, settings: [MeasurementSetting; 2]) -> Result<f64> {
    if state.particles() != 2 {
        return Err(Error::InvalidArgument(format!(
            "correlation needs a two-particle state, got {} particles",
            state.particles()
        )));
    }
    product_expectation(state, &settings)
}

/// Probability of `outcome` at `particle`, summed over all other outcomes.
pub fn marginal(
    state: &StateVector,
    settings: &[MeasurementSetting],
    particle: usize,
    outcome: Sign,
) -> Result<f64> {
    Ok(outcome_distribution(state, settings)?
        .into_iter()
        .filter(|(signs, _)| signs.get(particle) == Some(&outcome))
        .map(|(_, p)| p)
        .sum())
}
