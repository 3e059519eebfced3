//! Analysis toolkit for simultaneous secrecy and covert communication over a
//! RIS-aided link protected by a cooperative jammer.
//!
//! The crate provides:
//!
//! - [`numerics`]: Gauss–Laguerre quadrature and the special functions the
//!   closed forms need (log-gamma, incomplete gamma, exponential integral).
//! - [`channel`]: scenario parameters, path loss, cascaded-fading statistics
//!   and seeded channel samplers.
//! - [`detection`]: the warden's radiometer analysis — detection error
//!   probability under fixed and optimal thresholds, and its closed-form
//!   channel average.
//! - [`capacity`]: average link capacities and the average secrecy capacity
//!   in closed form.
//! - [`montecarlo`]: reproducible Monte Carlo estimators that validate every
//!   closed form; parallel via rayon (feature `parallel`, on by default) with
//!   a bit-identical sequential fallback.
//! - [`qoe`]: the combined quality-of-experience metric, the constrained
//!   power-split problem and an exhaustive grid-search oracle.
//! - [`rl`]: a diffusion-policy learner plus a deterministic actor-critic
//!   baseline for the same power-split problem.
//!
//! All randomized components take explicit seeds and derive per-sample RNG
//! substreams, so results are reproducible bit-for-bit at any worker count.

pub mod capacity;
pub mod channel;
pub mod detection;
pub mod montecarlo;
pub mod numerics;
pub mod qoe;
pub mod rl;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// A numerical routine produced a non-finite intermediate or failed to
    /// converge; the message carries enough context to diagnose the regime.
    #[error("numerical failure: {0}")]
    Numerical(String),
    /// Learner training hit a non-finite loss; the message includes a state
    /// dump of the step that failed.
    #[error("training diverged: {0}")]
    Training(String),
    /// Checkpoint serialization/deserialization failure.
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
}

pub type Result<T> = std::result::Result<T, Error>;
