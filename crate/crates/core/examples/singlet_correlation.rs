//! Spin-½ singlet correlations from local amplitudes.
//!
//! Each particle's amplitude depends only on its own analyzer angle and the
//! internal phase it carried from the source. The table shows the amplitude
//! correlation U, the experimenter's correlation P = 2U² − 1 and the joint
//! probabilities, next to the Born-rule value from the state-vector oracle.
//!
//! ```sh
//! cargo run -p epr-amplitudes --example singlet_correlation
//! ```

use std::error::Error;

use epr_amplitudes::model::{self, Spin};
use epr_amplitudes::oracle::{self, MeasurementSetting};
use epr_amplitudes::Sign;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let c = model::local_amplitude(0.0, 0.0, Spin::Half, Sign::Plus);
    println!(
        "C1+ at θ = φ = 0: {:+.6} {:+.6}i (|C|² = {})",
        c.re(),
        c.im(),
        c.probability()
    );

    let state = oracle::singlet_state();
    println!(
        "{:>8} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "Δθ deg", "U", "P", "p(++)", "p(+-)", "oracle P"
    );
    for deg in (0..=360).step_by(30) {
        let delta = f64::from(deg).to_radians();
        let d = model::singlet_correlation(delta, 0.0);
        let settings = [
            MeasurementSetting::spin_half(delta),
            MeasurementSetting::spin_half(0.0),
        ];
        let e = oracle::correlation(&state, settings)?;
        assert!((d.p - e).abs() <= 1e-12);
        println!(
            "{deg:>8} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6}",
            d.u, d.p, d.p_pp, d.p_pm, e
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
