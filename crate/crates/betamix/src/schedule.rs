//! Growth schedule for the embedding dimension and histogram bandwidth.
//!
//! The estimator's embedding dimension grows like `exp(W(log n))` — a rate
//! strictly between `log log n` and `log n` — and the bandwidth shrinks like
//! `n^(-k_n)`, where
//!
//! ```text
//! k_n = (W(log n) + log(n)/2) / (log(n) * (exp(W(log n))/2 + 1))
//! ```
//!
//! and `W` is the principal branch of the Lambert W function. Both formulas
//! are evaluated with the real-valued (unfloored) `exp(W(log n))`; only the
//! dimension stored in [`Schedule`] is integerized.

use crate::error::{Error, Result};

/// Principal branch of the Lambert W function on `[0, inf)`.
///
/// Solves `w * exp(w) = x` by Halley iteration from the initial guess
/// `log(1 + x)`, capped at 50 iterations. The residual satisfies
/// `|w*exp(w) - x| <= 1e-10 * max(1, x)` on the supported domain.
pub fn lambert_w0(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!(
            "lambert_w0 is only defined for x >= 0 here, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut w = x.ln_1p();
    for _ in 0..50 {
        let ew = w.exp();
        let f = w * ew - x;
        // Halley step: quadratic-plus convergence on the principal branch.
        let next = w - f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0));
        if (next - w).abs() <= 1e-15 * next.abs().max(1.0) {
            return Ok(next);
        }
        w = next;
    }
    Ok(w)
}

/// Dimension/bandwidth schedule for a sample of size `n`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Schedule {
    /// Sample size the schedule was derived for.
    pub n: u64,
    /// Integerized embedding dimension, `max(1, floor(exp(W(log n))))`.
    pub d: usize,
    /// Bandwidth exponent `k_n`.
    pub k: f64,
    /// Bandwidth `h = n^(-k)`, in `(0, 1]`.
    pub h: f64,
}

/// Real-valued schedule quantities, before the dimension is integerized.
///
/// Useful as a diagnostic entry point for non-integer `n` (the growth
/// formulas are smooth in `n`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthParams {
    /// `exp(W(log n))`, the unfloored dimension.
    pub dim_real: f64,
    /// Bandwidth exponent `k_n`.
    pub k: f64,
    /// Bandwidth `n^(-k)`.
    pub h: f64,
}

/// Evaluates the growth formulas at a real-valued sample size `n >= 3`.
pub fn growth_params(n: f64) -> Result<GrowthParams> {
    if !(n >= 3.0) {
        return Err(Error::Domain(format!(
            "schedule requires n >= 3 so that log n > 1, got {n}"
        )));
    }
    let log_n = n.ln();
    let w = lambert_w0(log_n)?;
    let dim_real = w.exp();
    let k = (w + 0.5 * log_n) / (log_n * (0.5 * dim_real + 1.0));
    let h = n.powf(-k);
    Ok(GrowthParams { dim_real, k, h })
}

/// Builds the schedule for an integer sample size `n >= 3`.
pub fn make_schedule(n: u64) -> Result<Schedule> {
    let gp = growth_params(n as f64)?;
    let d = (gp.dim_real.floor() as usize).max(1);
    Ok(Schedule {
        n,
        d,
        k: gp.k,
        h: gp.h,
    })
}
