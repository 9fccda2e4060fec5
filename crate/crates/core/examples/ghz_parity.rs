//! Three-particle GHZ correlations in the x basis.
//!
//! With phases satisfying θ₁ − θ₂ − θ₃ − π/2 ∈ {0, ±π} the product amplitude
//! N·C₁C₂*C₃* is real for an odd number of `−` outcomes and imaginary
//! otherwise, reproducing the σx⊗σx⊗σx = −1 parity of the GHZ state.
//!
//! ```sh
//! cargo run -p epr-amplitudes --example ghz_parity
//! ```

use std::error::Error;

use epr_amplitudes::ghz::{self, GhzPhases};
use epr_amplitudes::oracle::{self, MeasurementSetting};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let phases = ghz::default_phases();
    let state = oracle::ghz_state();
    let xs = [MeasurementSetting::x_axis(); 3];

    println!(
        "{:>9} {:>18} {:>6} {:>8}",
        "outcome", "N C1 C2* C3*", "P", "Born"
    );
    for (o, p) in ghz::ghz_table(&phases) {
        let z = ghz::ghz_product_amplitude(&phases, o);
        let born = oracle::joint_probability(&state, &xs, &o.signs())?;
        assert!((p / 4.0 - born).abs() <= 1e-12);
        println!(
            "{:>9} {:>+8.4}{:>+8.4}i {p:>6.3} {born:>8.4}",
            o.to_string(),
            z.re,
            z.im
        );
    }
    println!(
        "oracle <σx σx σx> = {}",
        oracle::product_expectation(&state, &xs)?
    );

    match GhzPhases::new(0.0, 0.0, 0.0) {
        Ok(_) => unreachable!("(0, 0, 0) violates the phase constraint"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
