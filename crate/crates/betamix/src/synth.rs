//! Seeded synthetic process generators.
//!
//! Reproducibility is part of this module's contract, so the generator is a
//! fixed, named algorithm rather than an implementation detail: all samplers
//! draw from **SplitMix64** (Steele, Lea & Flood's `splitmix64`, as in Vigna's
//! reference implementation), with uniforms taken as the top 53 bits scaled
//! by 2^-53 and normal variates formed by the basic Box-Muller transform
//! (two uniforms per normal, cosine branch). The same seed and parameters
//! therefore reproduce the same series in any language, not just here.
//!
//! Stream layout per generator:
//! - `sample_iid_uniform`: one uniform per observation.
//! - `sample_markov`: one uniform for the stationary start, then one per
//!   transition (`n` uniforms in total).
//! - `sample_ar1`: two uniforms per observation (one normal each).

use crate::error::{Error, Result};
use crate::markov::MarkovChain;
use crate::series::Series;

/// Seed of the committed SplitMix64 generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Seed(pub u64);

/// SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: Seed) -> Self {
        SplitMix64 { state: seed.0 }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform on `[0, 1)`: top 53 bits scaled by 2^-53.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Standard normal via Box-Muller: `sqrt(-2 ln(1 - u1)) * cos(2 pi u2)`.
    ///
    /// `1 - u1` lies in `(0, 1]`, so the logarithm is always finite.
    pub fn next_normal(&mut self) -> f64 {
        let u1 = self.next_f64();
        let u2 = self.next_f64();
        (-2.0 * (1.0 - u1).ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
    }
}

/// Smallest state index whose cumulative probability exceeds `u`.
fn pick_state(probs: &[f64], u: f64) -> usize {
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if u < acc {
            return i;
        }
    }
    probs.len() - 1
}

/// Samples a stationary path of the chain: the first state is drawn from the
/// stationary distribution, transitions by inverse CDF on the matrix rows.
/// States are emitted as the reals `0 ... S-1`.
pub fn sample_markov(chain: &MarkovChain, n: usize, seed: Seed) -> Result<Series> {
    if n == 0 {
        return Err(Error::Domain("sample length must be >= 1".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut values = Vec::with_capacity(n);
    let mut state = pick_state(chain.stationary_distribution(), rng.next_f64());
    values.push(state as f64);
    for _ in 1..n {
        state = pick_state(&chain.transition_matrix()[state], rng.next_f64());
        values.push(state as f64);
    }
    Series::new(values)
}

/// Samples a stationary AR(1) path: `X_1 ~ N(0, sigma^2 / (1 - phi^2))`,
/// then `X_{t+1} = phi * X_t + sigma * eps_t` with standard normal shocks.
pub fn sample_ar1(phi: f64, sigma: f64, n: usize, seed: Seed) -> Result<Series> {
    if !(phi.abs() < 1.0) {
        return Err(Error::Domain(format!(
            "AR(1) is stationary only for |phi| < 1, got {phi}"
        )));
    }
    if !(sigma > 0.0) || !sigma.is_finite() {
        return Err(Error::Domain(format!(
            "innovation scale must be a positive real, got {sigma}"
        )));
    }
    if n == 0 {
        return Err(Error::Domain("sample length must be >= 1".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let mut values = Vec::with_capacity(n);
    let mut x = rng.next_normal() * sigma / (1.0 - phi * phi).sqrt();
    values.push(x);
    for _ in 1..n {
        x = phi * x + sigma * rng.next_normal();
        values.push(x);
    }
    Series::new(values)
}

/// `n` IID uniforms on `[0, 1)`.
pub fn sample_iid_uniform(n: usize, seed: Seed) -> Result<Series> {
    if n == 0 {
        return Err(Error::Domain("sample length must be >= 1".into()));
    }
    let mut rng = SplitMix64::new(seed);
    Series::new((0..n).map(|_| rng.next_f64()).collect())
}
