//! Estimator accuracy against the exact chain oracle.
//!
//! A symmetric two-state chain with switch probability q has
//! beta(a) = |1 - 2q|^a / 2 exactly. We sample one path per seed, estimate
//! at several lags, and compare to the closed form.
//!
//! Run: cargo run --release --example estimate_vs_oracle

use betamix::estimator::estimate_curve;
use betamix::markov::{beta_exact, MarkovChain};
use betamix::synth::{sample_markov, Seed};

fn main() {
    let q = 0.25;
    let n = 200_000;
    let seeds = 10u64;
    let lags = [1usize, 2, 3, 4, 5];

    let chain = MarkovChain::symmetric_two_state(q).unwrap();
    println!("two-state chain, q = {q}, n = {n}, {seeds} seeds, d = 1, h = 0.5");
    println!("================================================================\n");
    println!(
        "{:>4} {:>12} {:>12} {:>12}",
        "lag", "exact", "mean est.", "mean |err|"
    );
    println!("{}", "-".repeat(44));

    for &a in &lags {
        let exact = beta_exact(&chain, a).unwrap();
        let mut mean = 0.0;
        let mut err = 0.0;
        for seed in 0..seeds {
            let s = sample_markov(&chain, n, Seed(seed)).unwrap();
            let est = estimate_curve(&s, &[a], 1, 0.5).unwrap()[0].beta_hat;
            mean += est / seeds as f64;
            err += (est - exact).abs() / seeds as f64;
        }
        println!("{a:>4} {exact:>12.6} {mean:>12.6} {err:>12.6}");
    }

    println!();
    println!("The estimate converges on the exact coefficient at every lag;");
    println!("errors here are pure sampling noise (the chain's two states fall");
    println!("exactly into the two bins of the h = 0.5 grid, so there is no");
    println!("discretization bias).");
}
