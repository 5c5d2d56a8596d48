//! Prints the Benford first-digit probabilities and CDF.
//!
//! ```bash
//! cargo run -p fraudscreen --example benford_table
//! ```

use fraudscreen::{benford_cdf, benford_probability, Digit};

fn main() {
    println!("{:>5} {:>10} {:>10}", "digit", "P(d)", "F(d)");
    for d in Digit::all() {
        println!(
            "{:>5} {:>10.6} {:>10.6}",
            d,
            benford_probability(d),
            benford_cdf(d)
        );
    }
    let total: f64 = Digit::all().map(benford_probability).sum();
    println!("sum   {total:.15}");
}
