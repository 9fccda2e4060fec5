//! Seeded Monte Carlo event generation.
//!
//! Events are drawn independently from the joint distribution of
//! [`model::correlate`]; no per-particle event mechanism is modelled.
//!
//! Events are split into chunks of [`CHUNK_SIZE`]. Chunk `i` uses a
//! `ChaCha8Rng` seeded from the run seed with stream `i`, so counts depend
//! only on `(config, n_events, seed)` and not on how rayon schedules chunks.
//! Each event consumes one `u64`; its top 53 bits are compared against the
//! cumulative outcome probabilities quantized to multiples of `2⁻⁵³`.

use std::io::Write;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{self, JointDistribution, PairConfig};

pub const CHUNK_SIZE: u64 = 1 << 16;

const SCALE: f64 = (1u64 << 53) as f64;

/// Tallies of the four joint outcomes.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct OutcomeCounts {
    pub n_pp: u64,
    pub n_mm: u64,
    pub n_pm: u64,
    pub n_mp: u64,
}

impl OutcomeCounts {
    pub fn total(&self) -> u64 {
        self.n_pp + self.n_mm + self.n_pm + self.n_mp
    }

    /// Events with `+` at the first analyzer.
    pub fn first_plus(&self) -> u64 {
        self.n_pp + self.n_pm
    }

    /// Events with `+` at the second analyzer.
    pub fn second_plus(&self) -> u64 {
        self.n_pp + self.n_mp
    }

    pub fn merge(self, other: OutcomeCounts) -> OutcomeCounts {
        OutcomeCounts {
            n_pp: self.n_pp + other.n_pp,
            n_mm: self.n_mm + other.n_mm,
            n_pm: self.n_pm + other.n_pm,
            n_mp: self.n_mp + other.n_mp,
        }
    }

    pub const CSV_HEADER: &'static str = "n_pp,n_mm,n_pm,n_mp,n_total";

    /// Header plus one data row.
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "{}", Self::CSV_HEADER)?;
        writeln!(
            out,
            "{},{},{},{},{}",
            self.n_pp,
            self.n_mm,
            self.n_pm,
            self.n_mp,
            self.total()
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerRun {
    config: PairConfig,
    n_events: u64,
    seed: u64,
}

impl SamplerRun {
    pub fn new(config: PairConfig, n_events: u64, seed: u64) -> Result<SamplerRun> {
        if n_events == 0 {
            return Err(Error::InvalidArgument("n_events must be at least 1".into()));
        }
        Ok(SamplerRun {
            config,
            n_events,
            seed,
        })
    }

    pub fn config(&self) -> &PairConfig {
        &self.config
    }

    pub fn n_events(&self) -> u64 {
        self.n_events
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Cumulative thresholds for `++`, `−−`, `+−` on the 53-bit integer grid.
fn thresholds(dist: &JointDistribution) -> [u64; 3] {
    let q = |x: f64| (x * SCALE).round() as u64;
    let t1 = q(dist.p_pp);
    let t2 = q(dist.p_pp + dist.p_mm).max(t1);
    let t3 = q(dist.p_pp + dist.p_mm + dist.p_pm).max(t2);
    [t1, t2, t3]
}

fn sample_chunk(seed: u64, chunk: u64, events: u64, limits: [u64; 3]) -> OutcomeCounts {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    let mut counts = OutcomeCounts::default();
    for _ in 0..events {
        let r = rng.next_u64() >> 11;
        if r < limits[0] {
            counts.n_pp += 1;
        } else if r < limits[1] {
            counts.n_mm += 1;
        } else if r < limits[2] {
            counts.n_pm += 1;
        } else {
            counts.n_mp += 1;
        }
    }
    counts
}

/// Draws `n_events` joint outcomes; deterministic in `(config, n_events, seed)`.
pub fn sample_events(run: &SamplerRun) -> OutcomeCounts {
    let limits = thresholds(&model::correlate(&run.config));
    let chunks = run.n_events.div_ceil(CHUNK_SIZE);
    (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let start = chunk * CHUNK_SIZE;
            let len = CHUNK_SIZE.min(run.n_events - start);
            sample_chunk(run.seed, chunk, len, limits)
        })
        .reduce(OutcomeCounts::default, OutcomeCounts::merge)
}

/// `(coincidences − anticoincidences)/total`.
pub fn estimate_correlation(counts: &OutcomeCounts) -> Result<f64> {
    let total = counts.total();
    if total == 0 {
        return Err(Error::InvalidArgument(
            "cannot estimate a correlation from zero events".into(),
        ));
    }
    let coincidences = (counts.n_pp + counts.n_mm) as f64;
    let anticoincidences = (counts.n_pm + counts.n_mp) as f64;
    Ok((coincidences - anticoincidences) / total as f64)
}
