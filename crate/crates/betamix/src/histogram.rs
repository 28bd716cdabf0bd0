//! Sparse regular-grid histograms over the unit hypercube.
//!
//! Bins are cubes with side `h`; with `J = ceil(1/h)` bins per axis the grid
//! has `J^dim` cells in total, which is never materialized densely — only
//! occupied cells are stored, keyed by their multi-index in a `BTreeMap` so
//! that iteration order (and hence every downstream float accumulation) is
//! deterministic.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// A regular grid on `[0, 1]^dim` with cells of side `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    dim: usize,
    h: f64,
    bins_per_axis: usize,
}

/// Smallest `J` with `J * h >= 1`, computed robustly against `1/h`
/// rounding just above or below an integer.
fn bins_for_bandwidth(h: f64) -> usize {
    let mut j = (1.0 / h).ceil() as usize;
    while j > 1 && ((j - 1) as f64) * h >= 1.0 {
        j -= 1;
    }
    while (j as f64) * h < 1.0 {
        j += 1;
    }
    j
}

impl GridSpec {
    pub fn new(dim: usize, h: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Config("grid dimension must be >= 1".into()));
        }
        if !(h > 0.0 && h <= 1.0) {
            return Err(Error::Config(format!(
                "bandwidth must lie in (0, 1], got {h}"
            )));
        }
        Ok(GridSpec {
            dim,
            h,
            bins_per_axis: bins_for_bandwidth(h),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn bins_per_axis(&self) -> usize {
        self.bins_per_axis
    }

    /// Nominal cell volume `h^dim`.
    pub fn cell_volume(&self) -> f64 {
        self.h.powi(self.dim as i32)
    }

    /// Axis bin index for a coordinate in `[0, 1]`; the right edge is folded
    /// into the last bin so mass conservation is exact.
    pub fn axis_bin(&self, y: f64) -> u32 {
        let b = (y / self.h).floor() as usize;
        b.min(self.bins_per_axis - 1) as u32
    }

    /// Multi-index of the cell containing `point`.
    pub fn bin_of(&self, point: &[f64]) -> Result<Vec<u32>> {
        if point.len() != self.dim {
            return Err(Error::Config(format!(
                "point has {} coordinates, grid expects {}",
                point.len(),
                self.dim
            )));
        }
        point
            .iter()
            .map(|&y| {
                if !(0.0..=1.0).contains(&y) {
                    return Err(Error::Domain(format!(
                        "coordinate {y} outside [0, 1]; normalize the series first"
                    )));
                }
                Ok(self.axis_bin(y))
            })
            .collect()
    }
}

/// Bin-probability table over a [`GridSpec`]; all stored masses are positive
/// and sum to 1 whenever at least one point was counted.
#[derive(Debug, Clone)]
pub struct SparseHistogram {
    grid: GridSpec,
    count: usize,
    mass: BTreeMap<Vec<u32>, f64>,
}

impl SparseHistogram {
    /// Counts `points` (each with coordinates in `[0, 1]`) into the grid.
    ///
    /// An empty point list yields an empty table with `count() == 0`.
    pub fn build(points: &[Vec<f64>], grid: GridSpec) -> Result<Self> {
        let mut counts: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for p in points {
            *counts.entry(grid.bin_of(p)?).or_insert(0) += 1;
        }
        let m = points.len();
        let mass = counts
            .into_iter()
            .map(|(k, c)| (k, c as f64 / m as f64))
            .collect();
        Ok(SparseHistogram {
            grid,
            count: m,
            mass,
        })
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    /// Number of points counted.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Number of occupied cells.
    pub fn occupied_bins(&self) -> usize {
        self.mass.len()
    }

    /// Probability mass of a cell (0 for untouched cells).
    pub fn mass(&self, bin: &[u32]) -> f64 {
        self.mass.get(bin).copied().unwrap_or(0.0)
    }

    /// Occupied cells in lexicographic multi-index order.
    pub fn iter(&self) -> impl Iterator<Item = (&[u32], f64)> {
        self.mass.iter().map(|(k, &v)| (k.as_slice(), v))
    }

    /// Histogram density at `x`: `mass(bin(x)) / h^dim`.
    pub fn density_at(&self, x: &[f64]) -> Result<f64> {
        Ok(self.mass(&self.grid.bin_of(x)?) / self.grid.cell_volume())
    }
}
