//! Sample paths, min-max normalization, and sliding-window embeddings.

use crate::error::{Error, Result};

/// A finite real-valued sample path `X_1, ..., X_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    values: Vec<f64>,
}

impl Series {
    /// Wraps raw observations; every value must be finite and `n >= 1`.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Domain("series must contain at least one value".into()));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::Domain(format!(
                "series value at position {} is not finite: {v}",
                i + 1
            )));
        }
        Ok(Series { values })
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// The affine map `y = (x - offset) / scale` applied by [`normalize`].
///
/// For a constant series `scale` is stored as 0 and every output is 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineTransform {
    pub offset: f64,
    pub scale: f64,
}

/// Rescales a series onto `[0, 1]` by its observed range.
///
/// A constant series maps to all zeros: a point mass is trivially
/// independent of itself across time, and the estimator then reports 0.
pub fn normalize(s: &Series) -> (Series, AffineTransform) {
    let min = s.values.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = s.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let scale = max - min;
    let values = if scale == 0.0 {
        vec![0.0; s.len()]
    } else {
        s.values.iter().map(|x| (x - min) / scale).collect()
    };
    (Series { values }, AffineTransform { offset: min, scale })
}

/// Smallest sample size accepted by [`embed_pairs`] for the given `(d, a)`.
pub fn min_pair_len(d: usize, a: usize) -> usize {
    2 * d + a - 1
}

/// All `n - d + 1` sliding windows of `d` consecutive observations, in order.
pub fn embed(s: &Series, d: usize) -> Result<Vec<Vec<f64>>> {
    if d == 0 {
        return Err(Error::Domain("embedding dimension must be >= 1".into()));
    }
    if s.len() < d {
        return Err(Error::InsufficientData {
            needed: d,
            got: s.len(),
        });
    }
    Ok(s.values.windows(d).map(|w| w.to_vec()).collect())
}

/// Pairs of `d`-windows separated by a lag of `a` time points.
///
/// Output vector `t` (0-based) is the concatenation of the past block
/// `X_{t+1..t+d}` and the future block `X_{t+d+a..t+2d+a-1}`; there are
/// `n - a - 2d + 2` of them.
pub fn embed_pairs(s: &Series, d: usize, a: usize) -> Result<Vec<Vec<f64>>> {
    if d == 0 {
        return Err(Error::Domain("embedding dimension must be >= 1".into()));
    }
    if a == 0 {
        return Err(Error::Domain("lag must be >= 1".into()));
    }
    let needed = min_pair_len(d, a);
    if s.len() < needed {
        return Err(Error::InsufficientData {
            needed,
            got: s.len(),
        });
    }
    let count = s.len() - a - 2 * d + 2;
    let v = &s.values;
    let mut out = Vec::with_capacity(count);
    for t in 0..count {
        let mut pair = Vec::with_capacity(2 * d);
        pair.extend_from_slice(&v[t..t + d]);
        let future = t + d - 1 + a;
        pair.extend_from_slice(&v[future..future + d]);
        out.push(pair);
    }
    Ok(out)
}
