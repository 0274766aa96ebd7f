//! Runs the full robustness study with default settings and prints the
//! mean ISE table (methods x models), with standard errors.
//!
//! ```text
//! cargo run --release -p curvedepth --example benchmark_table [master_seed]
//! ```

use std::time::Instant;

use curvedepth::{run_benchmark, BenchmarkConfig};

fn main() {
    let master_seed = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("seed must be a 64-bit integer"))
        .unwrap_or(0);
    let config = BenchmarkConfig {
        master_seed,
        ..BenchmarkConfig::default()
    };
    let start = Instant::now();
    let table = run_benchmark(&config).expect("benchmark failed");
    let elapsed = start.elapsed();

    println!("mean ISE (standard error), S = {}", config.replications);
    print!("{:8}", "method");
    for model in &config.models {
        print!("  {:>16}", format!("model {}", model.id()));
    }
    println!();
    for &method in &config.methods {
        print!("{:8}", method.name());
        for &model in &config.models {
            let row = table.get(method, model).unwrap();
            print!("  {:>8.4} ({:.4})", row.mean_ise, row.se_ise);
        }
        println!();
    }
    eprintln!("elapsed: {:.1?}", elapsed);
}
