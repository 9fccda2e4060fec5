//! Monte Carlo coincidence counting.
//!
//! Events are drawn from the model's joint distribution; the estimate of P is
//! (coincidences − anticoincidences)/N. Counts are identical for a given seed
//! however many threads run the chunks.
//!
//! ```sh
//! cargo run --release -p epr-amplitudes --example monte_carlo_coincidences
//! ```

use std::error::Error;
use std::f64::consts::PI;

use epr_amplitudes::model::{self, PairConfig};
use epr_amplitudes::sampler::{self, SamplerRun};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let n = 200_000;
    println!(
        "{:>8} {:>10} {:>10} {:>10} {:>10}",
        "Δθ deg", "n_pp+n_mm", "n_pm+n_mp", "P hat", "P"
    );
    for deg in (0..=180).step_by(30) {
        let config = PairConfig::singlet(f64::from(deg) * PI / 180.0, 0.0);
        let counts = sampler::sample_events(&SamplerRun::new(config, n, 2024)?);
        let estimate = sampler::estimate_correlation(&counts)?;
        println!(
            "{deg:>8} {:>10} {:>10} {:>10.5} {:>10.5}",
            counts.n_pp + counts.n_mm,
            counts.n_pm + counts.n_mp,
            estimate,
            model::correlate(&config).p
        );
    }

    let run = SamplerRun::new(PairConfig::photon(0.2, 0.9), n, 7)?;
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build()?;
    let same = single.install(|| sampler::sample_events(&run)) == sampler::sample_events(&run);
    println!("single-threaded and parallel counts identical: {same}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
