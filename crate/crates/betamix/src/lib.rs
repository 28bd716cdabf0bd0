//! # betamix
//!
//! Estimation of the absolute-regularity (beta-mixing) coefficient of a
//! stationary time series from a single sample path.
//!
//! The mixing coefficient at lag `a` is the total variation distance between
//! the joint law of observations separated by `a` time steps and the product
//! of their marginals: the L1 distance from independence. It is estimated
//! here by embedding the series in windows of `d` consecutive values,
//! building sparse histograms of the windows and of lagged window pairs, and
//! taking half the L1 distance between the pair histogram and the product of
//! the window histogram with itself.
//!
//! ```
//! use betamix::{estimate_beta, EstimatorConfig, MarkovChain, Seed};
//!
//! // a two-state chain that switches with probability 0.25 has
//! // beta(1) = 0.25 exactly
//! let chain = MarkovChain::symmetric_two_state(0.25).unwrap();
//! let exact = betamix::markov::beta_exact(&chain, 1).unwrap();
//!
//! let sample = betamix::synth::sample_markov(&chain, 50_000, Seed(1)).unwrap();
//! let est = estimate_beta(&sample, &EstimatorConfig::new(1, 1, 0.5).unwrap()).unwrap();
//! assert!((est.beta_hat - exact).abs() < 0.02);
//! ```
//!
//! Modules:
//! - [`schedule`]: dimension/bandwidth growth schedule (Lambert W based).
//! - [`series`]: sample paths, normalization, sliding-window embeddings.
//! - [`histogram`]: sparse regular-grid histograms on the unit cube.
//! - [`estimator`]: the two-histogram estimate and a multi-lag driver.
//! - [`markov`]: exact coefficients for finite-state chains (the oracle).
//! - [`synth`]: seeded synthetic processes for experiments and tests.
//! - [`bounds`]: finite-sample deviation bounds and the blocking scheme.
//! - [`cli`]: the `betamix` command-line entry point.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod estimator;
pub mod histogram;
pub mod markov;
pub mod schedule;
pub mod series;
pub mod synth;

pub use error::{Error, Result};
pub use estimator::{estimate_beta, estimate_curve, EstimatorConfig, MixingEstimate};
pub use histogram::{GridSpec, SparseHistogram};
pub use markov::MarkovChain;
pub use schedule::{lambert_w0, make_schedule, Schedule};
pub use series::Series;
pub use synth::Seed;
