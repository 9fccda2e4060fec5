//! Quantum correlations of entangled particles computed from local complex
//! amplitudes.
//!
//! Each particle carries a complex amplitude that depends only on its own
//! analyzer setting and an internal phase fixed at the source. The amplitude
//! correlation `U = 2 Re(C₁C₂*)` squared gives the coincidence probability,
//! and the experimenter's correlation follows as `P = 2U² − 1`.
//!
//! The crate is organised as:
//!
//! - [`model`]: local amplitudes, `U`, `P` and joint distributions for
//!   maximally entangled pairs (spin-½ singlet and polarization-entangled
//!   photons).
//! - [`interference`]: the two-photon position-correlation fringe.
//! - [`ghz`]: three-particle GHZ amplitudes and x-basis joint probabilities.
//! - [`oracle`]: an independent state-vector engine (Born rule with explicit
//!   projectors) used to check every model output.
//! - [`bell`]: CHSH evaluation, lattice scans and the enumeration of all
//!   deterministic instruction sets.
//! - [`sampler`]: seeded, thread-count-independent Monte Carlo event counts.
//! - [`cli`]: the `epr-amp` command-line front-end.
//!
//! ```
//! use epr_amplitudes::model;
//! use std::f64::consts::PI;
//!
//! let dist = model::singlet_correlation(0.0, PI / 3.0);
//! assert!((dist.p + 0.5).abs() < 1e-12);
//! ```

pub mod bell;
pub mod cli;
pub mod error;
pub mod ghz;
pub mod interference;
pub mod model;
pub mod oracle;
pub mod sampler;
mod sign;

pub use error::{Error, Result};
pub use sign::Sign;
