//! CHSH: the amplitude model reaches 2√2 while no instruction set carried
//! from the source exceeds 2.
//!
//! ```sh
//! cargo run -p epr-amplitudes --example chsh_contrast
//! ```

use std::error::Error;

use epr_amplitudes::bell::{self, ChshSettings, DeterministicStrategy};
use epr_amplitudes::model;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let singlet = |a: f64, b: f64| model::singlet_correlation(a, b).p;
    let photon = |a: f64, b: f64| model::photon_correlation(a, b).p;

    let s = bell::chsh_value(singlet, &ChshSettings::singlet_optimal())?;
    let p = bell::chsh_value(photon, &ChshSettings::photon_optimal())?;
    println!("singlet S = {s:.12}");
    println!("photon  S = {p:.12}");

    for strategy in DeterministicStrategy::all() {
        println!(
            "A={:>2} A'={:>2} B={:>2} B'={:>2}  S={:>2}",
            strategy.outcome_a.value(),
            strategy.outcome_a_prime.value(),
            strategy.outcome_b.value(),
            strategy.outcome_b_prime.value(),
            strategy.chsh()
        );
    }
    println!(
        "max |S| over instruction sets: {}",
        bell::max_deterministic_chsh()
    );

    let scan = bell::scan_chsh(singlet, 8)?;
    let best = bell::max_abs(&scan).expect("non-empty");
    println!(
        "best of {} lattice points: |S| = {:.12}",
        scan.len(),
        best.s.abs()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
