//! Exact mixing coefficients for finite-state stationary Markov chains.
//!
//! These serve as the ground truth the estimator is validated against. For a
//! first-order stationary chain, conditioning on the present screens off the
//! past, so the infinite-dimensional coefficient reduces to
//!
//! ```text
//! beta(a) = sum_i pi_i * 1/2 * sum_j |P^a[i][j] - pi_j|
//! ```
//!
//! and the finite-window variant equals it for every window length.

use std::path::Path;

use crate::error::{Error, Result};

const ROW_SUM_TOL: f64 = 1e-12;
const STATIONARY_TOL: f64 = 1e-13;
const MAX_POWER_ITERATIONS: usize = 100_000;

/// A finite-state chain: row-stochastic transition matrix plus its unique
/// stationary distribution (computed and checked at construction).
#[derive(Debug, Clone, PartialEq)]
pub struct MarkovChain {
    p: Vec<Vec<f64>>,
    pi: Vec<f64>,
}

impl MarkovChain {
    /// Validates `p` and computes the stationary distribution.
    ///
    /// Requires at least two states, nonnegative entries, rows summing to 1
    /// within 1e-12, and irreducibility (otherwise the stationary
    /// distribution is not unique).
    pub fn new(p: Vec<Vec<f64>>) -> Result<Self> {
        let pi = stationary(&p)?;
        Ok(MarkovChain { p, pi })
    }

    /// Two states, switching with probability `q`: `P = [[1-q, q], [q, 1-q]]`.
    pub fn symmetric_two_state(q: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&q) {
            return Err(Error::Domain(format!(
                "switch probability must lie in [0, 1], got {q}"
            )));
        }
        MarkovChain::new(vec![vec![1.0 - q, q], vec![q, 1.0 - q]])
    }

    /// Parses the chain text format: first non-comment line holds the state
    /// count `S`, the next `S` lines hold the rows of the transition matrix
    /// as whitespace-separated decimals. Blank lines and lines starting with
    /// `#` are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows: Vec<(usize, &str)> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            rows.push((i + 1, t));
        }
        let (first_line, first) = *rows.first().ok_or(Error::Parse {
            line: 1,
            message: "empty chain file".into(),
        })?;
        let s: usize = first.parse().map_err(|_| Error::Parse {
            line: first_line,
            message: format!("expected the state count, got {first:?}"),
        })?;
        if rows.len() != s + 1 {
            return Err(Error::Parse {
                line: rows.last().map(|r| r.0).unwrap_or(first_line),
                message: format!("expected {s} matrix rows, found {}", rows.len() - 1),
            });
        }
        let mut p = Vec::with_capacity(s);
        for &(line, row) in &rows[1..] {
            let vals: Vec<f64> = row
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<f64>().map_err(|_| Error::Parse {
                        line,
                        message: format!("not a decimal: {tok:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            if vals.len() != s {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {s} entries, found {}", vals.len()),
                });
            }
            p.push(vals);
        }
        MarkovChain::new(p)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        MarkovChain::parse(&std::fs::read_to_string(path)?)
    }

    pub fn num_states(&self) -> usize {
        self.p.len()
    }

    pub fn transition_matrix(&self) -> &[Vec<f64>] {
        &self.p
    }

    pub fn stationary_distribution(&self) -> &[f64] {
        &self.pi
    }
}

fn validate_stochastic(p: &[Vec<f64>]) -> Result<usize> {
    let s = p.len();
    if s < 2 {
        return Err(Error::Domain(format!(
            "chain needs at least 2 states, got {s}"
        )));
    }
    for (i, row) in p.iter().enumerate() {
        if row.len() != s {
            return Err(Error::Domain(format!(
                "row {} has {} entries, expected {s}",
                i + 1,
                row.len()
            )));
        }
        let mut sum = 0.0;
        for &v in row {
            if !(v >= 0.0) || !v.is_finite() {
                return Err(Error::Domain(format!(
                    "transition probabilities must be finite and >= 0, row {} has {v}",
                    i + 1
                )));
            }
            sum += v;
        }
        if (sum - 1.0).abs() > ROW_SUM_TOL {
            return Err(Error::Domain(format!(
                "row {} sums to {sum}, expected 1 within {ROW_SUM_TOL}",
                i + 1
            )));
        }
    }
    Ok(s)
}

/// States reachable from state 0 along positive-probability edges.
fn reachable(p: &[Vec<f64>], transpose: bool) -> Vec<bool> {
    let s = p.len();
    let mut seen = vec![false; s];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(i) = stack.pop() {
        for j in 0..s {
            let edge = if transpose { p[j][i] } else { p[i][j] };
            if edge > 0.0 && !seen[j] {
                seen[j] = true;
                stack.push(j);
            }
        }
    }
    seen
}

/// The unique stationary distribution of a row-stochastic, irreducible
/// transition matrix.
///
/// Irreducibility is checked first (forward and backward reachability from
/// state 0); power iteration then runs on the half-lazy kernel
/// `(P + I) / 2`, which has the same stationary distribution but converges
/// for periodic chains too.
pub fn stationary(p: &[Vec<f64>]) -> Result<Vec<f64>> {
    let s = validate_stochastic(p)?;
    if reachable(p, false).iter().any(|r| !r) || reachable(p, true).iter().any(|r| !r) {
        return Err(Error::NonErgodic(
            "transition graph is not strongly connected, stationary distribution not unique"
                .into(),
        ));
    }
    let mut x = vec![1.0 / s as f64; s];
    for _ in 0..MAX_POWER_ITERATIONS {
        let mut next = vec![0.0; s];
        for i in 0..s {
            for j in 0..s {
                next[j] += x[i] * p[i][j];
            }
        }
        for j in 0..s {
            next[j] = 0.5 * (next[j] + x[j]);
        }
        let diff: f64 = next.iter().zip(&x).map(|(a, b)| (a - b).abs()).sum();
        x = next;
        if diff <= STATIONARY_TOL {
            // exact renormalization guards against drift over many steps
            let total: f64 = x.iter().sum();
            for v in &mut x {
                *v /= total;
            }
            return Ok(x);
        }
    }
    Err(Error::NonErgodic(
        "power iteration did not converge; the chain mixes too slowly".into(),
    ))
}

fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let s = a.len();
    let mut out = vec![vec![0.0; s]; s];
    for i in 0..s {
        for k in 0..s {
            let aik = a[i][k];
            if aik == 0.0 {
                continue;
            }
            for j in 0..s {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// `P^a` by binary exponentiation, `a >= 1`.
fn mat_pow(p: &[Vec<f64>], mut a: usize) -> Vec<Vec<f64>> {
    let s = p.len();
    let mut result: Vec<Vec<f64>> = (0..s)
        .map(|i| (0..s).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let mut base = p.to_vec();
    while a > 0 {
        if a & 1 == 1 {
            result = mat_mul(&result, &base);
        }
        a >>= 1;
        if a > 0 {
            base = mat_mul(&base, &base);
        }
    }
    result
}

/// Exact mixing coefficient of the chain at lag `a`.
///
/// Equals the finite-window coefficient for every window length, because the
/// chain is first-order.
pub fn beta_exact(chain: &MarkovChain, a: usize) -> Result<f64> {
    if a == 0 {
        return Err(Error::Domain("lag must be >= 1".into()));
    }
    let pa = mat_pow(&chain.p, a);
    let mut beta = 0.0;
    for (i, row) in pa.iter().enumerate() {
        let tv: f64 = row
            .iter()
            .zip(&chain.pi)
            .map(|(pij, pij_stat)| (pij - pij_stat).abs())
            .sum();
        beta += chain.pi[i] * 0.5 * tv;
    }
    Ok(beta.clamp(0.0, 1.0))
}

/// Finite-window mixing coefficient at lag `a` with window length `d`, by
/// brute-force enumeration of the joint law of two `d`-blocks separated by
/// `a` steps.
///
/// Enumerates all `S^(2d)` block pairs; guarded by a capacity error at 10^6.
pub fn beta_d_exact(chain: &MarkovChain, a: usize, d: usize) -> Result<f64> {
    if a == 0 {
        return Err(Error::Domain("lag must be >= 1".into()));
    }
    if d == 0 {
        return Err(Error::Domain("window length must be >= 1".into()));
    }
    let s = chain.num_states();
    let tuples = (s as f64).powi(2 * d as i32);
    if tuples > 1e6 {
        return Err(Error::Capacity(format!(
            "S^(2d) = {s}^{} = {tuples:.3e} exceeds the 1e6 enumeration guard",
            2 * d
        )));
    }

    // p_start[b] = pi(b_1) * prod P(b_i, b_{i+1});  p_path[b] = prod P(b_i, b_{i+1})
    let blocks = enumerate_blocks(s, d);
    let mut p_start = Vec::with_capacity(blocks.len());
    let mut p_path = Vec::with_capacity(blocks.len());
    for b in &blocks {
        let mut path = 1.0;
        for w in b.windows(2) {
            path *= chain.p[w[0]][w[1]];
        }
        p_path.push(path);
        p_start.push(chain.pi[b[0]] * path);
    }
    let pa = mat_pow(&chain.p, a);

    let mut total = 0.0;
    for (bi, b) in blocks.iter().enumerate() {
        let last = *b.last().expect("blocks are nonempty");
        for (ci, c) in blocks.iter().enumerate() {
            let joint = p_start[bi] * pa[last][c[0]] * p_path[ci];
            let product = p_start[bi] * p_start[ci];
            total += (joint - product).abs();
        }
    }
    Ok((0.5 * total).clamp(0.0, 1.0))
}

/// All `S^d` state blocks of length `d`, in lexicographic order.
fn enumerate_blocks(s: usize, d: usize) -> Vec<Vec<usize>> {
    let count = s.pow(d as u32);
    let mut out = Vec::with_capacity(count);
    for mut idx in 0..count {
        let mut b = vec![0usize; d];
        for slot in b.iter_mut().rev() {
            *slot = idx % s;
            idx /= s;
        }
        out.push(b);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stationary_of_symmetric_chain() {
        let pi = stationary(&[vec![0.75, 0.25], vec![0.25, 0.75]]).unwrap();
        assert!((pi[0] - 0.5).abs() <= 1e-12);
        assert!((pi[1] - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn stationary_of_identical_rows() {
        let r = vec![0.2, 0.3, 0.5];
        let pi = stationary(&[r.clone(), r.clone(), r.clone()]).unwrap();
        for (got, want) in pi.iter().zip(&r) {
            assert!((got - want).abs() <= 1e-10);
        }
    }

    #[test]
    fn identity_is_non_ergodic() {
        let p = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        assert!(matches!(stationary(&p), Err(Error::NonErgodic(_))));
    }

    #[test]
    fn reducible_chain_rejected() {
        // state 2 unreachable from {0, 1}
        let p = vec![
            vec![0.5, 0.5, 0.0],
            vec![0.5, 0.5, 0.0],
            vec![0.3, 0.3, 0.4],
        ];
        assert!(matches!(stationary(&p), Err(Error::NonErgodic(_))));
    }

    #[test]
    fn periodic_flip_chain_has_uniform_stationary() {
        let chain = MarkovChain::symmetric_two_state(1.0).unwrap();
        assert!((chain.stationary_distribution()[0] - 0.5).abs() <= 1e-12);
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            MarkovChain::new(vec![vec![1.0]]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            MarkovChain::new(vec![vec![0.6, 0.6], vec![0.5, 0.5]]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            MarkovChain::new(vec![vec![1.2, -0.2], vec![0.5, 0.5]]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn iid_chain_has_zero_beta() {
        let r = vec![0.3, 0.2, 0.5];
        let chain = MarkovChain::new(vec![r.clone(), r.clone(), r]).unwrap();
        for a in 1..=4 {
            assert!(beta_exact(&chain, a).unwrap().abs() <= 1e-12);
            assert!(beta_d_exact(&chain, a, 2).unwrap().abs() <= 1e-12);
        }
    }

    #[test]
    fn symmetric_chain_closed_form() {
        // beta(a) = 1/2 * |1 - 2q|^a  (eigendecomposition of the 2x2 kernel)
        let chain = MarkovChain::symmetric_two_state(0.25).unwrap();
        assert!((beta_exact(&chain, 1).unwrap() - 0.25).abs() <= 1e-12);
        assert!((beta_exact(&chain, 2).unwrap() - 0.125).abs() <= 1e-12);

        let flip = MarkovChain::symmetric_two_state(1.0).unwrap();
        assert!((beta_exact(&flip, 1).unwrap() - 0.5).abs() <= 1e-15);
    }

    #[test]
    fn window_variant_reduces_to_first_order_value() {
        let chain = MarkovChain::symmetric_two_state(0.25).unwrap();
        assert!((beta_d_exact(&chain, 1, 1).unwrap() - 0.25).abs() <= 1e-12);
        assert!((beta_d_exact(&chain, 1, 2).unwrap() - 0.25).abs() <= 1e-10);
        assert!((beta_d_exact(&chain, 2, 3).unwrap() - 0.125).abs() <= 1e-10);
    }

    #[test]
    fn capacity_guard() {
        let chain = MarkovChain::symmetric_two_state(0.25).unwrap();
        assert!(matches!(
            beta_d_exact(&chain, 1, 12),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn beta_decays_in_lag() {
        let chain = MarkovChain::new(vec![
            vec![0.6, 0.3, 0.1],
            vec![0.2, 0.5, 0.3],
            vec![0.3, 0.3, 0.4],
        ])
        .unwrap();
        let mut prev = f64::INFINITY;
        for a in 1..=8 {
            let b = beta_exact(&chain, a).unwrap();
            assert!((0.0..=1.0).contains(&b));
            if prev > 1e-13 {
                assert!(b < prev, "beta did not decay at lag {a}");
            }
            prev = b;
        }
    }

    #[test]
    fn parse_chain_file() {
        let text = "# two-state symmetric chain\n2\n0.75 0.25\n0.25 0.75\n";
        let chain = MarkovChain::parse(text).unwrap();
        assert_eq!(chain.num_states(), 2);
        assert_eq!(chain.transition_matrix()[0][1], 0.25);

        assert!(matches!(
            MarkovChain::parse("2\n0.75 0.25\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            MarkovChain::parse("2\n0.75 x\n0.25 0.75\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
