//! Finite-sample deviation bounds and the blocking construction.
//!
//! The bounds are conditional on plug-in values for the expected L1 errors
//! of the histogram estimators (these are unknowable exactly); they are
//! reported raw, with a flag marking values >= 1 as vacuous.

use serde::Serialize;

use crate::error::{Error, Result};

/// Plug-in arguments for the estimator deviation bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundInputs {
    /// Blocks per parity class; `2 * mu * m = n` when tied to a sample.
    pub mu: u64,
    /// Block length.
    pub m: u64,
    /// Deviation level the bound is evaluated at.
    pub epsilon: f64,
    /// Plug-in for the expected L1 error of the marginal histogram.
    pub expected_l1_marginal: f64,
    /// Plug-in for the expected L1 error of the joint histogram.
    pub expected_l1_joint: f64,
    /// Value (or upper bound) of the mixing coefficient at lag `m`.
    pub beta_m: f64,
}

/// An evaluated bound right-hand side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundValue {
    pub value: f64,
    /// True when the bound is >= 1 and therefore carries no information.
    pub vacuous: bool,
}

impl BoundValue {
    fn from_value(value: f64) -> Self {
        BoundValue {
            value,
            vacuous: value >= 1.0,
        }
    }
}

fn check_common(mu: u64, epsilon: f64, beta_m: f64) -> Result<()> {
    if mu == 0 {
        return Err(Error::Config("mu must be >= 1".into()));
    }
    if !(epsilon > 0.0) || !epsilon.is_finite() {
        return Err(Error::Config(format!(
            "epsilon must be a positive real, got {epsilon}"
        )));
    }
    if !(0.0..=1.0).contains(&beta_m) {
        return Err(Error::Config(format!(
            "beta_m must lie in [0, 1], got {beta_m}"
        )));
    }
    Ok(())
}

fn check_l1(name: &str, l1: f64) -> Result<()> {
    if !(l1 >= 0.0) || !l1.is_finite() {
        return Err(Error::Config(format!(
            "{name} must be a nonnegative real, got {l1}"
        )));
    }
    Ok(())
}

/// Bound on `P(|beta_hat - beta^d(a)| > epsilon)`:
///
/// ```text
/// 2 exp(-mu * eps1^2 / 2) + 2 exp(-mu * eps2^2 / 2) + 4 (mu - 1) beta_m
/// ```
///
/// with `eps1 = epsilon/2 - expected_l1_marginal` and
/// `eps2 = epsilon - expected_l1_joint`; both must be positive, else the
/// bound's hypothesis fails and an error names the offending term.
pub fn estimator_deviation_bound(b: &BoundInputs) -> Result<BoundValue> {
    check_common(b.mu, b.epsilon, b.beta_m)?;
    check_l1("expected_l1_marginal", b.expected_l1_marginal)?;
    check_l1("expected_l1_joint", b.expected_l1_joint)?;
    let (eps1, eps2) = deviation_epsilons(b);
    if eps1 <= 0.0 {
        return Err(Error::Hypothesis {
            term: "epsilon_1 = epsilon/2 - expected_l1_marginal",
            value: eps1,
        });
    }
    if eps2 <= 0.0 {
        return Err(Error::Hypothesis {
            term: "epsilon_2 = epsilon - expected_l1_joint",
            value: eps2,
        });
    }
    let mu = b.mu as f64;
    let value = 2.0 * (-mu * eps1 * eps1 / 2.0).exp()
        + 2.0 * (-mu * eps2 * eps2 / 2.0).exp()
        + 4.0 * (mu - 1.0) * b.beta_m;
    Ok(BoundValue::from_value(value))
}

/// The effective deviation levels used by [`estimator_deviation_bound`].
pub fn deviation_epsilons(b: &BoundInputs) -> (f64, f64) {
    (
        b.epsilon / 2.0 - b.expected_l1_marginal,
        b.epsilon - b.expected_l1_joint,
    )
}

/// Bound on `P(int |fhat - f| > epsilon)` for a single histogram:
///
/// ```text
/// 2 exp(-mu * eps1^2 / 2) + 2 (mu - 1) beta_m
/// ```
///
/// with `eps1 = epsilon - expected_l1 > 0`.
pub fn histogram_l1_bound(
    mu: u64,
    _m: u64,
    epsilon: f64,
    expected_l1: f64,
    beta_m: f64,
) -> Result<BoundValue> {
    check_common(mu, epsilon, beta_m)?;
    check_l1("expected_l1", expected_l1)?;
    let eps1 = epsilon - expected_l1;
    if eps1 <= 0.0 {
        return Err(Error::Hypothesis {
            term: "epsilon_1 = epsilon - expected_l1",
            value: eps1,
        });
    }
    let mu = mu as f64;
    let value = 2.0 * (-mu * eps1 * eps1 / 2.0).exp() + 2.0 * (mu - 1.0) * beta_m;
    Ok(BoundValue::from_value(value))
}

/// A 1-based inclusive index range `X_start ... X_end`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BlockRange {
    pub start: usize,
    pub end: usize,
}

impl BlockRange {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The same range as 0-based half-open, for slicing.
    pub fn to_zero_based(&self) -> std::ops::Range<usize> {
        self.start - 1..self.end
    }
}

/// Splits `1 ... n` into `mu = n / (2m)` alternating odd blocks (`U`) and
/// even blocks (`V`), each of length `m`:
/// `U_j = [2(j-1)m + 1, (2j-1)m]`, `V_j = [(2j-1)m + 1, 2jm]`.
pub fn blocking_partition(n: usize, m: usize) -> Result<(Vec<BlockRange>, Vec<BlockRange>)> {
    if m == 0 {
        return Err(Error::Partition("block length must be >= 1".into()));
    }
    if n == 0 || n % (2 * m) != 0 {
        return Err(Error::Partition(format!(
            "2m = {} must divide n = {n} exactly",
            2 * m
        )));
    }
    let mu = n / (2 * m);
    let mut u = Vec::with_capacity(mu);
    let mut v = Vec::with_capacity(mu);
    for j in 1..=mu {
        u.push(BlockRange {
            start: 2 * (j - 1) * m + 1,
            end: (2 * j - 1) * m,
        });
        v.push(BlockRange {
            start: (2 * j - 1) * m + 1,
            end: 2 * j * m,
        });
    }
    Ok((u, v))
}

/// Block length `floor(n^(1/(1+r)))` for a chain whose mixing coefficient
/// decays like `a^(-r)`, adjusted downward to the largest value that divides
/// `n/2` so the partition is exact; falls back to 1 (always valid for even
/// `n`; odd `n` cannot be partitioned and also falls back to 1).
pub fn markov_block_length(n: u64, r: f64) -> Result<u64> {
    if n < 2 {
        return Err(Error::Domain(format!("need n >= 2, got {n}")));
    }
    if !(r > 0.0) || !r.is_finite() {
        return Err(Error::Domain(format!(
            "decay exponent must be a positive real, got {r}"
        )));
    }
    let nf = n as f64;
    let mut base = nf.powf(1.0 / (1.0 + r)).floor() as u64;
    // powf can land a hair on either side of an exact integer power
    while ((base + 1) as f64).powf(1.0 + r) <= nf * (1.0 + 1e-12) {
        base += 1;
    }
    while base > 1 && (base as f64).powf(1.0 + r) > nf * (1.0 + 1e-12) {
        base -= 1;
    }
    if n % 2 != 0 {
        return Ok(1);
    }
    let half = n / 2;
    Ok((1..=base).rev().find(|m| half % m == 0).unwrap_or(1))
}
