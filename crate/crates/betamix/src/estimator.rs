//! The two-histogram mixing-coefficient estimator.
//!
//! For a lag `a`, the estimate is half the L1 distance between the joint
//! histogram of lagged window pairs and the product of the marginal window
//! histogram with itself:
//!
//! ```text
//! beta_hat = 1/2 * sum over all bin pairs (b, b') of |pJ(b,b') - pM(b)*pM(b')|
//! ```
//!
//! Both densities are piecewise constant on the same product grid, so the
//! integral reduces exactly to this finite sum. The sum is evaluated sparsely
//! over the occupied joint cells via the identity
//!
//! ```text
//! sum_all |pJ - pP| = 1 + sum over support(pJ) of (|pJ - pP| - pP)
//! ```
//!
//! which holds because the product masses total exactly 1.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::histogram::{GridSpec, SparseHistogram};
use crate::schedule::Schedule;
use crate::series::{embed, embed_pairs, min_pair_len, normalize, Series};

/// Lag, embedding dimension, and bandwidth for one estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EstimatorConfig {
    /// Time lag `a >= 1` between the two windows.
    pub a: usize,
    /// Window length `d >= 1`.
    pub d: usize,
    /// Histogram bandwidth in `(0, 1]`.
    pub h: f64,
}

impl EstimatorConfig {
    pub fn new(a: usize, d: usize, h: f64) -> Result<Self> {
        if a == 0 {
            return Err(Error::Config("lag must be >= 1".into()));
        }
        if d == 0 {
            return Err(Error::Config("embedding dimension must be >= 1".into()));
        }
        if !(h > 0.0 && h <= 1.0) {
            return Err(Error::Config(format!(
                "bandwidth must lie in (0, 1], got {h}"
            )));
        }
        Ok(EstimatorConfig { a, d, h })
    }

    /// Takes `d` and `h` from a precomputed growth schedule.
    pub fn from_schedule(a: usize, schedule: &Schedule) -> Result<Self> {
        EstimatorConfig::new(a, schedule.d, schedule.h)
    }
}

/// One mixing-coefficient estimate together with the setup that produced it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixingEstimate {
    #[serde(flatten)]
    pub config: EstimatorConfig,
    /// Length of the input series.
    pub n: usize,
    /// Estimated coefficient, in `[0, 1]`.
    pub beta_hat: f64,
    /// Windows entering the marginal histogram: `n - d + 1`.
    pub marginal_points: usize,
    /// Window pairs entering the joint histogram: `n - a - 2d + 2`.
    pub joint_points: usize,
    /// Occupied cells of the joint histogram.
    pub occupied_joint_bins: usize,
}

/// Half the L1 distance between a joint histogram and the product of a
/// marginal histogram with itself.
///
/// `joint` must live on the Cartesian square of `marginal`'s grid: twice the
/// dimension, identical bandwidth and bins per axis.
pub fn beta_from_histograms(joint: &SparseHistogram, marginal: &SparseHistogram) -> Result<f64> {
    let d = marginal.grid().dim();
    if joint.grid().dim() != 2 * d {
        return Err(Error::Config(format!(
            "joint grid dimension {} is not twice the marginal dimension {}",
            joint.grid().dim(),
            d
        )));
    }
    if joint.grid().h() != marginal.grid().h()
        || joint.grid().bins_per_axis() != marginal.grid().bins_per_axis()
    {
        return Err(Error::Config(
            "joint and marginal histograms must share one bandwidth and bin count".into(),
        ));
    }
    if joint.count() == 0 || marginal.count() == 0 {
        return Err(Error::Config(
            "histograms must contain at least one point".into(),
        ));
    }
    let mut acc = 0.0;
    for (bin, pj) in joint.iter() {
        let pp = marginal.mass(&bin[..d]) * marginal.mass(&bin[d..]);
        acc += (pj - pp).abs() - pp;
    }
    Ok((0.5 * (1.0 + acc)).clamp(0.0, 1.0))
}

/// Runs the full pipeline on a raw series: normalize, embed, build the two
/// histograms, and take half their L1 product-distance.
pub fn estimate_beta(s: &Series, config: &EstimatorConfig) -> Result<MixingEstimate> {
    let (normalized, _) = normalize(s);
    let marginal = marginal_histogram(&normalized, config.d, config.h)?;
    estimate_with_marginal(&normalized, config, &marginal)
}

/// Estimates over several lags, reusing one marginal histogram.
///
/// The series requirement is driven by the largest lag; results come back in
/// the order the lags were given.
pub fn estimate_curve(
    s: &Series,
    lags: &[usize],
    d: usize,
    h: f64,
) -> Result<Vec<MixingEstimate>> {
    if lags.is_empty() {
        return Err(Error::Config("at least one lag is required".into()));
    }
    let configs: Vec<EstimatorConfig> = lags
        .iter()
        .map(|&a| EstimatorConfig::new(a, d, h))
        .collect::<Result<_>>()?;
    let (normalized, _) = normalize(s);
    let marginal = marginal_histogram(&normalized, d, h)?;
    configs
        .iter()
        .map(|cfg| estimate_with_marginal(&normalized, cfg, &marginal))
        .collect()
}

fn marginal_histogram(normalized: &Series, d: usize, h: f64) -> Result<SparseHistogram> {
    let grid = GridSpec::new(d, h)?;
    SparseHistogram::build(&embed(normalized, d)?, grid)
}

fn estimate_with_marginal(
    normalized: &Series,
    config: &EstimatorConfig,
    marginal: &SparseHistogram,
) -> Result<MixingEstimate> {
    let n = normalized.len();
    let needed = min_pair_len(config.d, config.a);
    if n < needed {
        return Err(Error::InsufficientData { needed, got: n });
    }
    let joint_grid = GridSpec::new(2 * config.d, config.h)?;
    let joint = SparseHistogram::build(&embed_pairs(normalized, config.d, config.a)?, joint_grid)?;
    let beta_hat = beta_from_histograms(&joint, marginal)?;
    Ok(MixingEstimate {
        config: *config,
        n,
        beta_hat,
        marginal_points: marginal.count(),
        joint_points: joint.count(),
        occupied_joint_bins: joint.occupied_bins(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(v: Vec<f64>) -> Series {
        Series::new(v).unwrap()
    }

    fn alternating(n: usize) -> Series {
        series((0..n).map(|i| (i % 2) as f64).collect())
    }

    #[test]
    fn single_bin_grid_gives_zero() {
        // h = 1: one cell, pJ = 1, pM = 1 -> distance 0.
        let s = series(vec![0.3, 0.8, 0.1, 0.9, 0.5]);
        let est = estimate_beta(&s, &EstimatorConfig::new(1, 1, 1.0).unwrap()).unwrap();
        assert_eq!(est.beta_hat, 0.0);
    }

    #[test]
    fn hand_enumerated_two_bin_case() {
        // Marginal (1/2, 1/2); joint mass 1/2 on (0,1) and 1/2 on (1,0):
        // sum over 4 cells = |0-1/4| + |1/2-1/4| + |1/2-1/4| + |0-1/4| = 1.
        let mgrid = GridSpec::new(1, 0.5).unwrap();
        let jgrid = GridSpec::new(2, 0.5).unwrap();
        let marginal =
            SparseHistogram::build(&[vec![0.0], vec![1.0]], mgrid).unwrap();
        let joint =
            SparseHistogram::build(&[vec![0.0, 1.0], vec![1.0, 0.0]], jgrid).unwrap();
        assert_eq!(beta_from_histograms(&joint, &marginal).unwrap(), 0.5);
    }

    #[test]
    fn joint_equal_to_product_gives_zero() {
        let mgrid = GridSpec::new(1, 0.5).unwrap();
        let jgrid = GridSpec::new(2, 0.5).unwrap();
        let marginal = SparseHistogram::build(&[vec![0.0], vec![1.0]], mgrid).unwrap();
        let joint = SparseHistogram::build(
            &[vec![0.0, 0.0], vec![0.0, 1.0], vec![1.0, 0.0], vec![1.0, 1.0]],
            jgrid,
        )
        .unwrap();
        assert!(beta_from_histograms(&joint, &marginal).unwrap().abs() <= 1e-15);
    }

    #[test]
    fn mismatched_grids_rejected() {
        let m = SparseHistogram::build(&[vec![0.0]], GridSpec::new(1, 0.5).unwrap()).unwrap();
        let j3 =
            SparseHistogram::build(&[vec![0.0, 0.0, 0.0]], GridSpec::new(3, 0.5).unwrap()).unwrap();
        assert!(matches!(
            beta_from_histograms(&j3, &m),
            Err(Error::Config(_))
        ));
        let j_other_h =
            SparseHistogram::build(&[vec![0.0, 0.0]], GridSpec::new(2, 0.25).unwrap()).unwrap();
        assert!(matches!(
            beta_from_histograms(&j_other_h, &m),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn alternating_series_is_exactly_one_half() {
        let est = alternating(1000);
        let got = estimate_beta(&est, &EstimatorConfig::new(1, 1, 0.5).unwrap()).unwrap();
        assert_eq!(got.beta_hat, 0.5);
        assert_eq!(got.marginal_points, 1000);
        assert_eq!(got.joint_points, 999);
        assert_eq!(got.occupied_joint_bins, 2);
    }

    #[test]
    fn constant_series_gives_zero() {
        let s = series(vec![3.25; 64]);
        for (a, d) in [(1usize, 1usize), (2, 1), (1, 3)] {
            let est = estimate_beta(&s, &EstimatorConfig::new(a, d, 0.5).unwrap()).unwrap();
            assert_eq!(est.beta_hat, 0.0);
        }
    }

    #[test]
    fn insufficient_data_names_minimum() {
        let s = series(vec![1.0, 2.0, 3.0]);
        match estimate_beta(&s, &EstimatorConfig::new(2, 2, 0.5).unwrap()) {
            Err(Error::InsufficientData { needed, got }) => {
                assert_eq!(needed, 5);
                assert_eq!(got, 3);
            }
            other => panic!("expected insufficient-data error, got {other:?}"),
        }
    }

    #[test]
    fn curve_singleton_matches_single_estimate() {
        let s = alternating(200);
        let single = estimate_beta(&s, &EstimatorConfig::new(1, 1, 0.5).unwrap()).unwrap();
        let curve = estimate_curve(&s, &[1], 1, 0.5).unwrap();
        assert_eq!(curve.len(), 1);
        assert_eq!(curve[0].beta_hat, single.beta_hat);
    }

    #[test]
    fn affine_invariance_exact() {
        let raw: Vec<f64> = (0..150)
            .map(|i| ((i * 2654435761u64 as usize) % 1000) as f64 / 17.0 - 3.0)
            .collect();
        let s = series(raw.clone());
        let t = series(raw.iter().map(|x| 2.5 * x + 40.0).collect());
        let cfg = EstimatorConfig::new(2, 2, 0.3).unwrap();
        let a = estimate_beta(&s, &cfg).unwrap();
        let b = estimate_beta(&t, &cfg).unwrap();
        assert_eq!(a.beta_hat.to_bits(), b.beta_hat.to_bits());
    }

    #[test]
    fn determinism() {
        let s = alternating(501);
        let cfg = EstimatorConfig::new(3, 2, 0.4).unwrap();
        let x = estimate_beta(&s, &cfg).unwrap().beta_hat;
        let y = estimate_beta(&s, &cfg).unwrap().beta_hat;
        assert_eq!(x.to_bits(), y.to_bits());
    }
}
