//! Monte Carlo steady-state digit frequencies for a given ε and epoch size.
//!
//! ```bash
//! cargo run -p fraudscreen --example simulate_digits -- 5e-7 100 42
//! ```

use std::error::Error;

use fraudscreen::{benford_probability, simulate, Digit, MonteCarloConfig};

fn main() -> Result<(), Box<dyn Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let epsilon: f64 = args.first().map_or(Ok(5e-7), |s| s.parse())?;
    let n: u64 = args.get(1).map_or(Ok(100), |s| s.parse())?;
    let seed: u64 = args.get(2).map_or(Ok(42), |s| s.parse())?;

    let sim = simulate(&MonteCarloConfig::new(epsilon, n, seed)?)?;
    println!(
        "lambda* = {:.4}, {} epochs of {}, {} draws",
        sim.lambda_star, sim.epoch_count, sim.epoch_size, sim.total_draws
    );
    println!(
        "{:>5} {:>10} {:>10} {:>10}",
        "digit", "count", "freq", "benford"
    );
    for d in Digit::all() {
        println!(
            "{:>5} {:>10} {:>10.5} {:>10.5}",
            d,
            sim.pooled_counts.count(d),
            sim.pooled_frequencies.mass(d),
            benford_probability(d)
        );
    }
    Ok(())
}
