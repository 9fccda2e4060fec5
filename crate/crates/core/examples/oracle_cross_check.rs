//! Model versus state-vector quantum mechanics over a 360-point grid, for
//! both the singlet and the photon pair.
//!
//! ```sh
//! cargo run -p epr-amplitudes --example oracle_cross_check
//! ```

use std::error::Error;

use epr_amplitudes::cli::{max_model_oracle_deviation, PairSystem, COMPARE_TOLERANCE};
use epr_amplitudes::oracle::{self, MeasurementSetting};
use epr_amplitudes::Sign;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for system in [PairSystem::Singlet, PairSystem::Photon] {
        let worst = max_model_oracle_deviation(system, 360, 0.0)?;
        println!("{system:?}: max |model - oracle| = {worst:e} (tolerance {COMPARE_TOLERANCE:e})");
        assert!(worst <= COMPARE_TOLERANCE);
    }

    // the oracle's own no-signalling check
    let state = oracle::singlet_state();
    for remote in [0.0, 0.7, 2.1] {
        let settings = [
            MeasurementSetting::spin_half(0.3),
            MeasurementSetting::spin_half(remote),
        ];
        let m = oracle::marginal(&state, &settings, 0, Sign::Plus)?;
        println!("P(+ at analyzer 1 | analyzer 2 at {remote}) = {m}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
