//! Inverse-transform Monte Carlo estimation of steady-state first-digit
//! frequencies.
//!
//! A run of roughly `(1/(2ε))^(2/3)` draws is split into epochs the size of
//! the audit sample. Epoch `e` draws from sub-stream `e` of the configured
//! seed, so the result does not depend on how epochs are scheduled.

use rayon::prelude::*;

use crate::benford::{benford_cdf, Digit, DigitDistribution, FirstDigitCounts};
use crate::error::{Error, Result};
use crate::seeds;

pub const DEFAULT_MAX_DRAWS: u64 = 100_000_000;

/// Upper CDF boundaries `log10(d + 1)` for d = 1..=9.
fn cdf_table() -> [f64; 9] {
    let mut table = [0.0; 9];
    for d in Digit::all() {
        table[d.index()] = benford_cdf(d);
    }
    table
}

/// Target run length `(1/(2ε))^(2/3)`.
pub fn run_length(epsilon: f64) -> Result<f64> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::domain(format!("epsilon {epsilon} outside (0, 1)")));
    }
    // cbrt keeps exact cubes exact, e.g. epsilon = 5e-7 gives 10000.
    Ok((1.0 / (2.0 * epsilon)).cbrt().powi(2))
}

/// Maps a uniform variate to the smallest digit `d` with `u < cdf(d)`.
pub fn draw_digit(u: f64) -> Result<Digit> {
    if !(0.0..1.0).contains(&u) {
        return Err(Error::domain(format!("uniform variate {u} outside [0, 1)")));
    }
    Ok(invert(&cdf_table(), u))
}

#[inline]
fn invert(cdf: &[f64; 9], u: f64) -> Digit {
    let idx = cdf.iter().position(|&c| u < c).unwrap_or(8);
    Digit::from_index(idx)
}

#[derive(Debug, Clone, PartialEq)]
pub struct MonteCarloConfig {
    epsilon: f64,
    epoch_size: u64,
    seed: u64,
    max_draws: u64,
}

impl MonteCarloConfig {
    pub fn new(epsilon: f64, epoch_size: u64, seed: u64) -> Result<Self> {
        run_length(epsilon)?;
        if epoch_size == 0 {
            return Err(Error::domain("epoch size must be at least 1"));
        }
        Ok(Self {
            epsilon,
            epoch_size,
            seed,
            max_draws: DEFAULT_MAX_DRAWS,
        })
    }

    /// Overrides the draw budget (default 10^8).
    pub fn with_max_draws(mut self, max_draws: u64) -> Self {
        self.max_draws = max_draws;
        self
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn epoch_size(&self) -> u64 {
        self.epoch_size
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn max_draws(&self) -> u64 {
        self.max_draws
    }

    /// Number of epochs: `max(1, ceil(λ* / n))`.
    pub fn epoch_count(&self) -> u64 {
        let lambda = run_length(self.epsilon).expect("validated at construction");
        ((lambda / self.epoch_size as f64).ceil() as u64).max(1)
    }

    pub fn total_draws(&self) -> Option<u64> {
        self.epoch_count().checked_mul(self.epoch_size)
    }
}

/// How epochs are scheduled. Both produce bit-identical results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Serial,
    #[default]
    Parallel,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    pub lambda_star: f64,
    pub epsilon: f64,
    pub epoch_size: u64,
    pub epoch_count: u64,
    pub total_draws: u64,
    pub epoch_counts: Vec<FirstDigitCounts>,
    pub epoch_frequencies: Vec<DigitDistribution>,
    pub pooled_counts: FirstDigitCounts,
    /// Draw-weighted mean of the epoch frequencies; the downstream estimate.
    pub pooled_frequencies: DigitDistribution,
    pub seed: u64,
    pub generator: &'static str,
}

fn run_epoch(cdf: &[f64; 9], seed: u64, epoch: u64, size: u64) -> FirstDigitCounts {
    let mut rng = seeds::child(seed, epoch);
    let mut counts = [0u64; 9];
    for _ in 0..size {
        let d = invert(cdf, seeds::uniform(&mut rng));
        counts[d.index()] += 1;
    }
    FirstDigitCounts::from_array(counts)
}

/// Runs the simulation with epochs spread across the rayon pool.
pub fn simulate(config: &MonteCarloConfig) -> Result<SimulationResult> {
    simulate_with(config, Execution::Parallel)
}

pub fn simulate_with(config: &MonteCarloConfig, execution: Execution) -> Result<SimulationResult> {
    let lambda_star = run_length(config.epsilon)?;
    let epoch_count = config.epoch_count();
    let total_draws = config
        .total_draws()
        .filter(|&t| t <= config.max_draws)
        .ok_or_else(|| {
            Error::Capacity(format!(
                "{epoch_count} epochs of {} draws exceed the budget of {} draws",
                config.epoch_size, config.max_draws
            ))
        })?;

    let cdf = cdf_table();
    let epoch_counts: Vec<FirstDigitCounts> = match execution {
        Execution::Serial => (0..epoch_count)
            .map(|e| run_epoch(&cdf, config.seed, e, config.epoch_size))
            .collect(),
        Execution::Parallel => (0..epoch_count)
            .into_par_iter()
            .map(|e| run_epoch(&cdf, config.seed, e, config.epoch_size))
            .collect(),
    };

    let mut pooled_counts = FirstDigitCounts::new();
    for c in &epoch_counts {
        pooled_counts.merge(c);
    }
    let epoch_frequencies = epoch_counts
        .iter()
        .map(DigitDistribution::from_counts)
        .collect::<Result<Vec<_>>>()?;
    let pooled_frequencies = DigitDistribution::from_counts(&pooled_counts)?;

    Ok(SimulationResult {
        lambda_star,
        epsilon: config.epsilon,
        epoch_size: config.epoch_size,
        epoch_count,
        total_draws,
        epoch_counts,
        epoch_frequencies,
        pooled_counts,
        pooled_frequencies,
        seed: config.seed,
        generator: seeds::GENERATOR,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benford::benford_probability;
    use approx::assert_abs_diff_eq;

    #[test]
    fn run_length_examples() {
        // 100^(2/3) = 21.5443469003...
        assert_abs_diff_eq!(run_length(0.005).unwrap(), 21.544, epsilon = 0.001);
        assert_abs_diff_eq!(run_length(0.5).unwrap(), 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(run_length(5e-7).unwrap(), 10_000.0, epsilon = 0.01);
        for bad in [0.0, 1.0, -0.1, f64::NAN, 2.0] {
            assert!(matches!(run_length(bad), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn draw_digit_examples() {
        assert_eq!(draw_digit(0.0).unwrap().get(), 1);
        assert_eq!(draw_digit(0.300).unwrap().get(), 1);
        assert_eq!(draw_digit(0.302).unwrap().get(), 2);
        assert_eq!(draw_digit(0.9999).unwrap().get(), 9);
        assert!(draw_digit(1.0).is_err());
        assert!(draw_digit(-1e-12).is_err());
    }

    #[test]
    fn draw_digit_grid_matches_range_widths() {
        let n = 100_000u32;
        let mut counts = FirstDigitCounts::new();
        for k in 0..n {
            counts.record(draw_digit(f64::from(k) / f64::from(n)).unwrap());
        }
        for d in Digit::all() {
            let share = counts.count(d) as f64 / f64::from(n);
            assert_abs_diff_eq!(share, benford_probability(d), epsilon = 1e-4);
        }
    }

    #[test]
    fn epoch_arithmetic() {
        let r = simulate(&MonteCarloConfig::new(0.005, 300, 42).unwrap()).unwrap();
        assert_eq!(r.epoch_count, 1);
        assert_eq!(r.total_draws, 300);

        let r = simulate(&MonteCarloConfig::new(5e-7, 100, 7).unwrap()).unwrap();
        assert_eq!(r.epoch_count, 100);
        assert_eq!(r.total_draws, 10_000);
        assert_eq!(r.pooled_counts.total(), 10_000);
        assert_eq!(r.pooled_frequencies.sum(), 1.0);
    }

    #[test]
    fn pooled_is_weighted_mean_of_epochs() {
        let r = simulate(&MonteCarloConfig::new(1e-6, 37, 3).unwrap()).unwrap();
        for d in Digit::all() {
            let mean =
                r.epoch_frequencies.iter().map(|f| f.mass(d)).sum::<f64>() / r.epoch_count as f64;
            assert_abs_diff_eq!(mean, r.pooled_frequencies.mass(d), epsilon = 1e-12);
        }
    }

    #[test]
    fn serial_and_parallel_agree() {
        let cfg = MonteCarloConfig::new(1e-7, 50, 99).unwrap();
        let a = simulate_with(&cfg, Execution::Serial).unwrap();
        let b = simulate_with(&cfg, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = MonteCarloConfig::new(5e-7, 100, 1)
            .unwrap()
            .with_max_draws(9_999);
        assert!(matches!(simulate(&cfg), Err(Error::Capacity(_))));
    }

    #[test]
    fn invalid_config() {
        assert!(MonteCarloConfig::new(0.1, 0, 1).is_err());
        assert!(MonteCarloConfig::new(1.5, 10, 1).is_err());
    }
}
