//! Writes a synthetic ledger CSV.
//!
//! ```bash
//! cargo run -p fraudscreen --example synthetic_ledger -- out.csv benford 10000 2024
//! cargo run -p fraudscreen --example synthetic_ledger -- out.csv uniform 5000 7
//! cargo run -p fraudscreen --example synthetic_ledger -- out.csv inflate:9:0.2 5000 7
//! ```

use std::error::Error;
use std::fmt::Write as _;

use fraudscreen::synth::{generate_synthetic, ManipulationScheme};
use fraudscreen::Digit;

fn parse_scheme(s: &str) -> Result<ManipulationScheme, Box<dyn Error>> {
    Ok(match s {
        "benford" => ManipulationScheme::BenfordConforming,
        "uniform" => ManipulationScheme::UniformDigits,
        other => {
            let parts: Vec<&str> = other.split(':').collect();
            match parts.as_slice() {
                ["inflate", d, b] => {
                    ManipulationScheme::single_digit_inflation(Digit::new(d.parse()?)?, b.parse()?)?
                }
                _ => return Err(format!("unknown scheme '{other}'").into()),
            }
        }
    })
}

fn main() -> Result<(), Box<dyn Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let path = args
        .first()
        .map(String::as_str)
        .unwrap_or("synthetic_ledger.csv");
    let scheme = parse_scheme(args.get(1).map(String::as_str).unwrap_or("benford"))?;
    let n: usize = args
        .get(2)
        .map(|s| s.parse())
        .transpose()?
        .unwrap_or(10_000);
    let seed: u64 = args.get(3).map(|s| s.parse()).transpose()?.unwrap_or(2024);

    let values = generate_synthetic(&scheme, n, seed);
    let mut csv = String::from("id,account,amount\n");
    for (i, v) in values.iter().enumerate() {
        // Shortest round-trip rendering keeps the first digit of the value.
        writeln!(csv, "{},{},{}", i + 1, 4000 + i % 37, v)?;
    }
    std::fs::write(path, csv)?;
    eprintln!("wrote {n} rows ({}) to {path}", scheme.name());
    Ok(())
}
