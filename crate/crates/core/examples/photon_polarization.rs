//! Polarization-entangled photons: spin 1 and a source offset of π/2 give
//! P = −cos(2(θ₁ − θ₂)), half the period of the spin-½ case.
//!
//! ```sh
//! cargo run -p epr-amplitudes --example photon_polarization
//! ```

use std::error::Error;

use epr_amplitudes::model::{self, PairConfig};
use epr_amplitudes::oracle::{self, MeasurementSetting};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let state = oracle::singlet_state();
    println!(
        "{:>8} {:>10} {:>10} {:>12}",
        "Δθ deg", "U", "P", "-cos(2Δθ)"
    );
    for deg in (0..=180).step_by(15) {
        let delta = f64::from(deg).to_radians();
        let config = PairConfig::photon(delta, 0.0);
        let d = model::correlate(&config);
        let settings = [
            MeasurementSetting::photon(delta),
            MeasurementSetting::photon(0.0),
        ];
        assert!((d.p - oracle::correlation(&state, settings)?).abs() <= 1e-12);
        println!(
            "{deg:>8} {:>10.6} {:>10.6} {:>12.6}",
            d.u,
            d.p,
            -(2.0 * delta).cos()
        );
    }

    // the individual internal phases never matter, only their difference
    let config = PairConfig::photon(0.4, 1.1);
    for phi in [-3.0, 0.0, 0.5, 17.0] {
        println!(
            "φ₁ = {phi:>5}: U = {:.15}",
            model::amplitude_correlation_with_phase(&config, phi)
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
