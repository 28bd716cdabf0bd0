//! The alternating blocking scheme for weakly dependent data.
//!
//! A sample of length n = 2 * mu * m splits into mu odd blocks (U) and mu
//! even blocks (V) of length m each. Odd blocks are separated by m points,
//! so for mixing data they behave almost like an IID sample of blocks.
//!
//! Run: cargo run --example blocking_demo

use betamix::bounds::blocking_partition;

fn main() {
    let n = 24;
    for m in [3usize, 4, 6] {
        let (u, v) = blocking_partition(n, m).unwrap();
        println!("n = {n}, m = {m}, mu = {}:", u.len());
        print!("  U:");
        for b in &u {
            print!(" [{:>2}-{:>2}]", b.start, b.end);
        }
        println!();
        print!("  V:");
        for b in &v {
            print!(" [{:>2}-{:>2}]", b.start, b.end);
        }
        println!("\n");
    }

    // using the ranges to slice a concrete series
    let data: Vec<f64> = (1..=n).map(|i| i as f64).collect();
    let (u, _) = blocking_partition(n, 4).unwrap();
    println!("odd blocks of 1..={n} at m = 4:");
    for b in &u {
        println!("  {:?}", &data[b.to_zero_based()]);
    }

    match blocking_partition(10, 3) {
        Err(e) => println!("\nn = 10, m = 3 is rejected: {e}"),
        Ok(_) => unreachable!(),
    }
}
