//! Three-particle GHZ correlations from local amplitudes in the x basis.
//!
//! Particle `i` carries `Cᵢ₊ = (1/√2)·exp(iθᵢ)` and `Cᵢ₋ = (1/√2)·exp(i(θᵢ + π/2))`.
//! The product `N·C₁C₂*C₃*` with `N = 2√2` is a unit complex number; its real
//! part squared is the joint probability. When the phases satisfy
//! `θ₁ − θ₂ − θ₃ − π/2 ∈ {0, ±π}`, outcomes with an odd number of `−` signs
//! get probability 1 and the rest 0.
//!
//! Those 0/1 values are conditional certainties. Read as a distribution over
//! the eight outcomes, each allowed outcome carries 1/4; see
//! [`normalized_distribution`].

use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI, SQRT_2};
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::Sign;

/// Tolerance on the mod-π residue of `θ₁ − θ₂ − θ₃ − π/2`.
pub const PHASE_CONSTRAINT_TOL: f64 = 1e-9;

const TRIPLE_NORMALIZATION: f64 = 2.0 * SQRT_2;

/// Internal phase parameters of the three x-basis amplitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GhzPhases {
    theta1: f64,
    theta2: f64,
    theta3: f64,
}

impl GhzPhases {
    pub fn new(theta1: f64, theta2: f64, theta3: f64) -> Result<GhzPhases> {
        let residue = Self::residue(theta1, theta2, theta3);
        if residue.is_nan() || residue > PHASE_CONSTRAINT_TOL {
            return Err(Error::Constraint(format!(
                "θ₁ − θ₂ − θ₃ − π/2 must be 0 or ±π (mod 2π); \
                 ({theta1}, {theta2}, {theta3}) is off by {residue}"
            )));
        }
        Ok(GhzPhases {
            theta1,
            theta2,
            theta3,
        })
    }

    /// Distance of `θ₁ − θ₂ − θ₃ − π/2` from the nearest multiple of π.
    fn residue(theta1: f64, theta2: f64, theta3: f64) -> f64 {
        let r = (theta1 - theta2 - theta3 - FRAC_PI_2).rem_euclid(PI);
        r.min(PI - r)
    }

    pub fn thetas(&self) -> [f64; 3] {
        [self.theta1, self.theta2, self.theta3]
    }
}

impl Default for GhzPhases {
    fn default() -> Self {
        default_phases()
    }
}

/// `(π/2, 0, 0)`.
pub fn default_phases() -> GhzPhases {
    GhzPhases {
        theta1: FRAC_PI_2,
        theta2: 0.0,
        theta3: 0.0,
    }
}

/// x-basis outcomes of the three particles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TripleOutcome {
    pub s1: Sign,
    pub s2: Sign,
    pub s3: Sign,
}

impl TripleOutcome {
    pub fn new(s1: Sign, s2: Sign, s3: Sign) -> TripleOutcome {
        TripleOutcome { s1, s2, s3 }
    }

    /// All eight outcomes, `+` before `−`, particle 1 varying slowest.
    pub fn all() -> [TripleOutcome; 8] {
        let mut out = [TripleOutcome::new(Sign::Plus, Sign::Plus, Sign::Plus); 8];
        for (i, slot) in out.iter_mut().enumerate() {
            let bit = |shift: usize| {
                if (i >> shift) & 1 == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            };
            *slot = TripleOutcome::new(bit(2), bit(1), bit(0));
        }
        out
    }

    /// Product of the three eigenvalues.
    pub fn parity(&self) -> i32 {
        self.s1.value() * self.s2.value() * self.s3.value()
    }

    pub fn minus_count(&self) -> usize {
        self.signs().iter().filter(|s| **s == Sign::Minus).count()
    }

    pub fn signs(&self) -> [Sign; 3] {
        [self.s1, self.s2, self.s3]
    }
}

impl fmt::Display for TripleOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.s1, self.s2, self.s3)
    }
}

fn x_basis_amplitude(theta: f64, outcome: Sign) -> Complex64 {
    let phase = match outcome {
        Sign::Plus => theta,
        Sign::Minus => theta + FRAC_PI_2,
    };
    Complex64::from_polar(FRAC_1_SQRT_2, phase)
}

/// `N·C₁·C₂*·C₃*`, a unit-modulus complex number.
pub fn ghz_product_amplitude(phases: &GhzPhases, outcome: TripleOutcome) -> Complex64 {
    let c1 = x_basis_amplitude(phases.theta1, outcome.s1);
    let c2 = x_basis_amplitude(phases.theta2, outcome.s2);
    let c3 = x_basis_amplitude(phases.theta3, outcome.s3);
    TRIPLE_NORMALIZATION * c1 * c2.conj() * c3.conj()
}

/// `[Re(N·C₁C₂*C₃*)]²`: 1 for an odd number of `−` outcomes, 0 otherwise.
pub fn ghz_joint_probability(phases: &GhzPhases, outcome: TripleOutcome) -> f64 {
    let re = ghz_product_amplitude(phases, outcome).re;
    (re * re).clamp(0.0, 1.0)
}

/// The eight `(outcome, probability)` rows in [`TripleOutcome::all`] order.
pub fn ghz_table(phases: &GhzPhases) -> [(TripleOutcome, f64); 8] {
    TripleOutcome::all().map(|o| (o, ghz_joint_probability(phases, o)))
}

/// The joint probabilities rescaled to sum to one over the eight outcomes.
pub fn normalized_distribution(phases: &GhzPhases) -> [(TripleOutcome, f64); 8] {
    let table = ghz_table(phases);
    let total: f64 = table.iter().map(|(_, p)| p).sum();
    table.map(|(o, p)| (o, p / total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Sign::{Minus as M, Plus as P};

    const TOL: f64 = 1e-12;

    fn t(a: Sign, b: Sign, c: Sign) -> TripleOutcome {
        TripleOutcome::new(a, b, c)
    }

    // Phase of N·C₁C₂*C₃* summed by hand: θ₁ − θ₂ − θ₃ plus π/2 per sign.
    fn brute_force_phase(th: [f64; 3], o: TripleOutcome) -> f64 {
        let shift = |s: Sign| if s == Sign::Minus { FRAC_PI_2 } else { 0.0 };
        (th[0] + shift(o.s1)) - (th[1] + shift(o.s2)) - (th[2] + shift(o.s3))
    }

    #[test]
    fn constraint_is_checked() {
        assert!(GhzPhases::new(FRAC_PI_2, 0.0, 0.0).is_ok());
        assert!(GhzPhases::new(FRAC_PI_2 + PI, 0.0, 0.0).is_ok());
        assert!(GhzPhases::new(FRAC_PI_2 - PI, 0.0, 0.0).is_ok());
        assert!(GhzPhases::new(1.0, 0.3, 1.0 - 0.3 - FRAC_PI_2 + 4.0 * PI).is_ok());
        assert!(matches!(
            GhzPhases::new(0.0, 0.0, 0.0),
            Err(Error::Constraint(_))
        ));
        assert!(GhzPhases::new(FRAC_PI_2 + 1e-6, 0.0, 0.0).is_err());
        assert!(GhzPhases::new(f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn default_phases_satisfy_constraint() {
        let d = default_phases();
        assert_eq!(d.thetas(), [FRAC_PI_2, 0.0, 0.0]);
        assert!(GhzPhases::new(d.theta1, d.theta2, d.theta3).is_ok());
        assert!((ghz_joint_probability(&d, t(M, M, M)) - 1.0).abs() <= TOL);
    }

    #[test]
    fn product_amplitude_examples() {
        let d = default_phases();
        let mmm = ghz_product_amplitude(&d, t(M, M, M));
        assert!((mmm.re - 1.0).abs() <= TOL && mmm.im.abs() <= TOL);

        let pmm = ghz_product_amplitude(&d, t(P, M, M));
        assert!(pmm.re.abs() <= TOL && (pmm.im.abs() - 1.0).abs() <= TOL);

        let ppm = ghz_product_amplitude(&d, t(P, P, M));
        let phase = brute_force_phase(d.thetas(), t(P, P, M));
        assert!((ppm.norm() - 1.0).abs() <= TOL);
        assert!((ppm.re - phase.cos()).abs() <= TOL);
        assert!((ppm.re.abs() - 1.0).abs() <= TOL);
    }

    #[test]
    fn joint_probability_examples() {
        let d = default_phases();
        assert!((ghz_joint_probability(&d, t(M, M, M)) - 1.0).abs() <= TOL);
        assert!(ghz_joint_probability(&d, t(P, P, P)).abs() <= TOL);
        assert!((ghz_joint_probability(&d, t(P, M, P)) - 1.0).abs() <= TOL);
    }

    #[test]
    fn full_table_follows_the_parity_law() {
        let rows = ghz_table(&default_phases());
        let ones: Vec<_> = rows
            .iter()
            .filter(|(_, p)| (*p - 1.0).abs() <= TOL)
            .collect();
        let zeros: Vec<_> = rows.iter().filter(|(_, p)| p.abs() <= TOL).collect();
        assert_eq!(ones.len(), 4);
        assert_eq!(zeros.len(), 4);
        for (o, p) in rows {
            let expected = if o.parity() == -1 { 1.0 } else { 0.0 };
            assert!((p - expected).abs() <= TOL, "{o}: {p}");
            assert_eq!(o.parity() == -1, o.minus_count() % 2 == 1);
        }
        let total: f64 = normalized_distribution(&default_phases())
            .iter()
            .map(|r| r.1)
            .sum();
        assert!((total - 1.0).abs() <= TOL);
    }

    #[test]
    fn all_outcomes_are_distinct() {
        let all = TripleOutcome::all();
        let set: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(set.len(), 8);
        assert_eq!(all[0], t(P, P, P));
        assert_eq!(all[7], t(M, M, M));
    }

    fn valid_phases() -> impl Strategy<Value = GhzPhases> {
        (-10.0..10.0f64, -10.0..10.0f64, -3i32..3).prop_map(|(a, b, k)| {
            let c = a - b - FRAC_PI_2 - k as f64 * PI;
            GhzPhases::new(a, b, c).unwrap()
        })
    }

    fn outcome() -> impl Strategy<Value = TripleOutcome> {
        (0usize..8).prop_map(|i| TripleOutcome::all()[i])
    }

    proptest! {
        #[test]
        fn parity_law_for_any_valid_phases(ph in valid_phases()) {
            for (o, p) in ghz_table(&ph) {
                let expected = if o.parity() == -1 { 1.0 } else { 0.0 };
                prop_assert!((p - expected).abs() <= 1e-11);
            }
        }

        #[test]
        fn single_flip_rotates_by_quarter_turn(ph in valid_phases(), o in outcome(), which in 0usize..3) {
            let mut flipped = o;
            match which {
                0 => flipped.s1 = o.s1.flip(),
                1 => flipped.s2 = o.s2.flip(),
                _ => flipped.s3 = o.s3.flip(),
            }
            let a = ghz_product_amplitude(&ph, o);
            let b = ghz_product_amplitude(&ph, flipped);
            // b/a is ±i: unit modulus, zero real part
            let ratio = b / a;
            prop_assert!((ratio.norm() - 1.0).abs() <= 1e-11);
            prop_assert!(ratio.re.abs() <= 1e-11);
        }

        #[test]
        fn product_matches_hand_summed_phase(ph in valid_phases(), o in outcome()) {
            let z = ghz_product_amplitude(&ph, o);
            let phase = brute_force_phase(ph.thetas(), o);
            prop_assert!((z.re - phase.cos()).abs() <= 1e-11);
            prop_assert!((z.im - phase.sin()).abs() <= 1e-11);
        }
    }
}
