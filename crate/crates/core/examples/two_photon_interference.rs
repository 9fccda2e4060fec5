//! Two-photon position correlations: detectors at x₁ and x₂ see a
//! coincidence fringe ½(1 + cos(kα(x₁ − x₂))) with full visibility.
//!
//! ```sh
//! cargo run -p epr-amplitudes --example two_photon_interference
//! ```

use std::error::Error;

use epr_amplitudes::interference::{self, InterferenceConfig};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = InterferenceConfig::new(2.0 * std::f64::consts::PI, 0.25)?;
    println!("fringe period in x1 - x2: {}", cfg.fringe_period());

    for (dx, p) in interference::fringe_scan(&cfg, 16, 0.0)? {
        let bar = "#".repeat((p * 40.0).round() as usize);
        println!("{dx:>7.3} {p:>8.5} {bar}");
    }

    for offset in [0.0, 1.5, -20.0] {
        let v = interference::visibility_at(&cfg, 256, offset)?;
        println!("visibility with both detectors shifted by {offset}: {v}");
    }
    let moved = cfg.with_x0(3.0)?;
    println!(
        "x0 = 3 leaves the pattern unchanged: {} vs {}",
        interference::coincidence_probability(&cfg, 0.3, 0.1),
        interference::coincidence_probability(&moved, 0.3, 0.1)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
