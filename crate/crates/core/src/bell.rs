//! CHSH analysis and the local-realistic bound.
//!
//! `S = E(a,b) − E(a,b′) + E(a′,b) + E(a′,b′)`. Any correlation function built
//! from pre-assigned outcomes (an instruction set) has `|S| ≤ 2`; quantum
//! correlations reach `2√2`.

use std::f64::consts::PI;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::Sign;

const RANGE_SLACK: f64 = 1e-12;

/// Analyzer angles for the two settings on each side.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChshSettings {
    pub a: f64,
    pub a_prime: f64,
    pub b: f64,
    pub b_prime: f64,
}

impl ChshSettings {
    pub fn new(a: f64, a_prime: f64, b: f64, b_prime: f64) -> Result<ChshSettings> {
        if [a, a_prime, b, b_prime].iter().any(|x| !x.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "CHSH angles must be finite: ({a}, {a_prime}, {b}, {b_prime})"
            )));
        }
        Ok(ChshSettings {
            a,
            a_prime,
            b,
            b_prime,
        })
    }

    /// `(0, π/2, π/4, 3π/4)`: the maximal-violation settings for spin-½.
    pub fn singlet_optimal() -> ChshSettings {
        ChshSettings {
            a: 0.0,
            a_prime: PI / 2.0,
            b: PI / 4.0,
            b_prime: 3.0 * PI / 4.0,
        }
    }

    /// `(0, π/4, π/8, 3π/8)`: the maximal-violation settings for photons.
    pub fn photon_optimal() -> ChshSettings {
        ChshSettings {
            a: 0.0,
            a_prime: PI / 4.0,
            b: PI / 8.0,
            b_prime: 3.0 * PI / 8.0,
        }
    }
}

/// CHSH combination of `correlation` at `settings`.
///
/// Fails if the correlation returns a value outside `[−1, 1]`.
pub fn chsh_value<F>(correlation: F, settings: &ChshSettings) -> Result<f64>
where
    F: Fn(f64, f64) -> f64,
{
    let eval = |x: f64, y: f64| -> Result<f64> {
        let e = correlation(x, y);
        if e.is_nan() || e.abs() > 1.0 + RANGE_SLACK {
            return Err(Error::ContractViolation(format!(
                "correlation E({x}, {y}) = {e} is outside [-1, 1]"
            )));
        }
        Ok(e)
    };
    let s = settings;
    Ok(eval(s.a, s.b)? - eval(s.a, s.b_prime)?
        + eval(s.a_prime, s.b)?
        + eval(s.a_prime, s.b_prime)?)
}

/// A pre-assigned outcome for each of the two settings on each side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeterministicStrategy {
    pub outcome_a: Sign,
    pub outcome_a_prime: Sign,
    pub outcome_b: Sign,
    pub outcome_b_prime: Sign,
}

impl DeterministicStrategy {
    /// All 16 instruction sets.
    pub fn all() -> Vec<DeterministicStrategy> {
        (0u8..16)
            .map(|bits| {
                let pick = |k: u8| {
                    if bits >> k & 1 == 0 {
                        Sign::Plus
                    } else {
                        Sign::Minus
                    }
                };
                DeterministicStrategy {
                    outcome_a: pick(3),
                    outcome_a_prime: pick(2),
                    outcome_b: pick(1),
                    outcome_b_prime: pick(0),
                }
            })
            .collect()
    }

    /// `S` with `E(x, y)` the product of the assigned outcomes.
    pub fn chsh(&self) -> i32 {
        let a = self.outcome_a.value();
        let ap = self.outcome_a_prime.value();
        let b = self.outcome_b.value();
        let bp = self.outcome_b_prime.value();
        a * b - a * bp + ap * b + ap * bp
    }
}

/// `max |S|` over all 16 instruction sets; exactly 2.
pub fn max_deterministic_chsh() -> f64 {
    let best = DeterministicStrategy::all()
        .iter()
        .map(|s| s.chsh().abs())
        .max()
        .expect("16 strategies");
    f64::from(best)
}

/// One lattice point of a CHSH scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChshPoint {
    pub settings: ChshSettings,
    pub s: f64,
}

/// Evaluates `S` on every point of the lattice `{jπ/n : j = 0..n}⁴`.
///
/// Points are evaluated in parallel; the result is ordered by lattice index
/// with `a` varying slowest.
pub fn scan_chsh<F>(correlation: F, grid_points: usize) -> Result<Vec<ChshPoint>>
where
    F: Fn(f64, f64) -> f64 + Sync,
{
    if grid_points < 2 {
        return Err(Error::InvalidArgument(format!(
            "CHSH scan needs at least 2 grid points per angle, got {grid_points}"
        )));
    }
    let n = grid_points;
    let angle = |j: usize| j as f64 * PI / n as f64;
    (0..n.pow(4))
        .into_par_iter()
        .map(|idx| {
            let settings = ChshSettings {
                a: angle(idx / (n * n * n)),
                a_prime: angle(idx / (n * n) % n),
                b: angle(idx / n % n),
                b_prime: angle(idx % n),
            };
            let s = chsh_value(&correlation, &settings)?;
            Ok(ChshPoint { settings, s })
        })
        .collect()
}

/// Point with the largest `|S|` (first one on ties).
pub fn max_abs(points: &[ChshPoint]) -> Option<ChshPoint> {
    points.iter().copied().fold(None, |best, p| match best {
        Some(b) if b.s.abs() >= p.s.abs() => Some(b),
        _ => Some(p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model;
    use proptest::prelude::*;
    use std::f64::consts::SQRT_2;

    fn singlet(x: f64, y: f64) -> f64 {
        model::singlet_correlation(x, y).p
    }

    fn photon(x: f64, y: f64) -> f64 {
        model::photon_correlation(x, y).p
    }

    #[test]
    fn chsh_examples() {
        let s = chsh_value(singlet, &ChshSettings::singlet_optimal()).unwrap();
        // −cos at the four angle differences: −(√2/2)·(1 + 1 + 1 + 1)
        let expected =
            -(PI / 4.0).cos() + (3.0 * PI / 4.0).cos() - (PI / 4.0).cos() - (PI / 4.0).cos();
        assert!((s - expected).abs() <= 1e-12);
        assert!((s + 2.0 * SQRT_2).abs() <= 1e-9);

        assert_eq!(
            chsh_value(|_, _| 1.0, &ChshSettings::singlet_optimal()).unwrap(),
            2.0
        );

        let s = chsh_value(photon, &ChshSettings::photon_optimal()).unwrap();
        assert!((s.abs() - 2.0 * SQRT_2).abs() <= 1e-9);
    }

    #[test]
    fn out_of_range_correlation_is_rejected() {
        let r = chsh_value(|_, _| 1.5, &ChshSettings::singlet_optimal());
        assert!(matches!(r, Err(Error::ContractViolation(_))));
        let r = chsh_value(|_, _| f64::NAN, &ChshSettings::singlet_optimal());
        assert!(r.is_err());
        assert!(ChshSettings::new(0.0, f64::NAN, 0.0, 0.0).is_err());
    }

    #[test]
    fn deterministic_enumeration() {
        let all = DeterministicStrategy::all();
        assert_eq!(all.len(), 16);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 16);
        for s in &all {
            assert!(matches!(s.chsh().abs(), 0 | 2), "{s:?}");
        }
        assert_eq!(max_deterministic_chsh(), 2.0);
    }

    #[test]
    fn scan_examples() {
        let points = scan_chsh(singlet, 4).unwrap();
        assert_eq!(points.len(), 256);
        let best = max_abs(&points).unwrap();
        assert!((best.s.abs() - 2.0 * SQRT_2).abs() <= 1e-9);

        let tiny = scan_chsh(|_, _| 0.0, 2).unwrap();
        assert_eq!(tiny.len(), 16);
        assert!(matches!(
            scan_chsh(singlet, 1),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn scan_is_ordered_by_lattice_index() {
        let points = scan_chsh(singlet, 3).unwrap();
        let step = PI / 3.0;
        assert_eq!(
            points[0].settings,
            ChshSettings::new(0.0, 0.0, 0.0, 0.0).unwrap()
        );
        assert_eq!(points[1].settings.b_prime, step);
        assert_eq!(points[3].settings.b, step);
        assert_eq!(points[27].settings.a, step);
        assert_eq!(points.len(), 81);
    }

    #[test]
    fn local_deterministic_model_stays_below_two() {
        // outcomes fixed by the analyzer angle alone on each side
        let side = |x: f64| if x.cos() >= 0.0 { 1.0 } else { -1.0 };
        let local = move |x: f64, y: f64| -side(x) * side(y + 0.3);
        let points = scan_chsh(local, 8).unwrap();
        assert!(max_abs(&points).unwrap().s.abs() <= 2.0);
    }

    proptest! {
        #[test]
        fn model_respects_tsirelson_bound(
            a in -7.0..7.0f64, ap in -7.0..7.0f64, b in -7.0..7.0f64, bp in -7.0..7.0f64,
        ) {
            let st = ChshSettings::new(a, ap, b, bp).unwrap();
            prop_assert!(chsh_value(singlet, &st).unwrap().abs() <= 2.0 * SQRT_2 + 1e-9);
            prop_assert!(chsh_value(photon, &st).unwrap().abs() <= 2.0 * SQRT_2 + 1e-9);
        }

        #[test]
        fn chsh_is_linear_in_the_correlation(
            lambda in 0.0..1.0f64,
            a in -7.0..7.0f64, ap in -7.0..7.0f64, b in -7.0..7.0f64, bp in -7.0..7.0f64,
        ) {
            let st = ChshSettings::new(a, ap, b, bp).unwrap();
            let mixed = |x: f64, y: f64| lambda * singlet(x, y) + (1.0 - lambda) * photon(x, y);
            let lhs = chsh_value(mixed, &st).unwrap();
            let rhs = lambda * chsh_value(singlet, &st).unwrap()
                + (1.0 - lambda) * chsh_value(photon, &st).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-12);
        }

        #[test]
        fn mixtures_of_instruction_sets_stay_below_two(
            weights in proptest::collection::vec(0.0..1.0f64, 16),
        ) {
            let total: f64 = weights.iter().sum::<f64>().max(1e-9);
            let s: f64 = DeterministicStrategy::all()
                .iter()
                .zip(&weights)
                .map(|(st, w)| w / total * f64::from(st.chsh()))
                .sum();
            prop_assert!(s.abs() <= 2.0 + 1e-12);
        }
    }
}
