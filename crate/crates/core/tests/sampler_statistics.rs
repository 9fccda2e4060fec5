use std::f64::consts::{FRAC_PI_3, PI};

use epr_amplitudes::model::{self, PairConfig};
use epr_amplitudes::sampler::{self, OutcomeCounts, SamplerRun, CHUNK_SIZE};

fn counts(config: PairConfig, n: u64, seed: u64) -> OutcomeCounts {
    sampler::sample_events(&SamplerRun::new(config, n, seed).unwrap())
}

#[test]
fn spread_of_estimates_matches_binomial_error() {
    let n = 100_000u64;
    let config = PairConfig::singlet(FRAC_PI_3, 0.0);
    let p = model::correlate(&config).p;
    let estimates: Vec<f64> = (0..100u64)
        .map(|seed| sampler::estimate_correlation(&counts(config, n, 1_000 + seed)).unwrap())
        .collect();
    let mean = estimates.iter().sum::<f64>() / estimates.len() as f64;
    let var =
        estimates.iter().map(|e| (e - mean).powi(2)).sum::<f64>() / (estimates.len() - 1) as f64;
    let sd = var.sqrt();
    let expected = ((1.0 - p * p) / n as f64).sqrt();
    assert!(
        sd <= 1.5 * expected && sd >= expected / 1.5,
        "sd {sd} vs {expected}"
    );
    assert!((mean - p).abs() <= 5.0 * expected / 10.0, "mean {mean}");
}

#[test]
fn local_marginal_ignores_the_remote_setting() {
    let n = 400_000u64;
    let bound = 5.0 * (n as f64).sqrt();
    for (k, remote) in [0.0, 0.4, PI / 2.0, 2.0, PI].into_iter().enumerate() {
        for config in [
            PairConfig::singlet(0.3, remote),
            PairConfig::photon(0.3, remote),
        ] {
            let c = counts(config, n, 77 + k as u64);
            assert!(
                (c.first_plus() as f64 - n as f64 / 2.0).abs() <= bound,
                "{c:?}"
            );
            assert!(
                (c.second_plus() as f64 - n as f64 / 2.0).abs() <= bound,
                "{c:?}"
            );
        }
    }
}

#[test]
fn counts_do_not_depend_on_thread_count() {
    // crosses several chunk boundaries with a ragged final chunk
    let n = 5 * CHUNK_SIZE + 123;
    let run = SamplerRun::new(PairConfig::photon(0.1, 1.2), n, 9).unwrap();
    let reference = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| sampler::sample_events(&run));
    assert_eq!(reference.total(), n);
    for threads in [2, 3, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        assert_eq!(pool.install(|| sampler::sample_events(&run)), reference);
    }
}

#[test]
fn longer_runs_extend_shorter_ones_chunk_by_chunk() {
    // chunk i is drawn from stream i whatever the total, so a longer run
    // contains every tally of the shorter one
    let config = PairConfig::singlet(0.7, 0.0);
    let short = counts(config, CHUNK_SIZE, 5);
    let long = counts(config, 2 * CHUNK_SIZE, 5);
    assert!(long.n_pp >= short.n_pp && long.n_mm >= short.n_mm);
    assert!(long.n_pm >= short.n_pm && long.n_mp >= short.n_mp);
    assert_eq!(long.total() - short.total(), CHUNK_SIZE);
}
