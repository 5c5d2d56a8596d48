//! Empirical Type I rate and power of the screening test on synthetic data.
//!
//! The last block repeats the Benford run at ε = 0.005, where the simulated
//! reference is a single epoch of n draws and the rejection rate is far above α.
//!
//! ```bash
//! cargo run --release -p fraudscreen --example calibrate_power
//! ```

use std::error::Error;

use fraudscreen::synth::{calibrate, CalibrationConfig, ManipulationScheme};
use fraudscreen::Digit;

fn main() -> Result<(), Box<dyn Error>> {
    let schemes = [
        ManipulationScheme::BenfordConforming,
        ManipulationScheme::UniformDigits,
        ManipulationScheme::single_digit_inflation(Digit::new(1)?, 0.1)?,
        ManipulationScheme::single_digit_inflation(Digit::new(9)?, 0.05)?,
    ];
    println!(
        "{:<14} {:>8} {:>12} {:>12}",
        "scheme", "epsilon", "rate", "theoretical"
    );
    for scheme in schemes {
        run(scheme, 1e-8)?;
    }
    run(ManipulationScheme::BenfordConforming, 0.005)?;
    Ok(())
}

fn run(scheme: ManipulationScheme, epsilon: f64) -> Result<(), Box<dyn Error>> {
    let mut cfg = CalibrationConfig::new(scheme, 500, 500, epsilon, 0.05, 1);
    cfg.compare_theoretical = true;
    let r = calibrate(&cfg)?;
    println!(
        "{:<14} {:>8.0e} {:>12.3} {:>12.3}",
        scheme.name(),
        epsilon,
        r.rejection_rate,
        r.theoretical_rejection_rate.unwrap_or(f64::NAN)
    );
    Ok(())
}
