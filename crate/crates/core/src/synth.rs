//! Synthetic balances and empirical calibration of the screening test.
//!
//! Feeding Benford-conforming data through the full pipeline measures how
//! often H₀ is rejected when it is true (the Type I rate); feeding
//! manipulated data measures power.

use rand::Rng;
use rayon::prelude::*;

use crate::benford::{benford_distribution, extract_digit_counts, Digit};
use crate::error::{Error, Result};
use crate::gof::{benford_gof_test, Decision, SignificanceConfig};
use crate::montecarlo::{simulate_with, Execution, MonteCarloConfig};
use crate::seeds;

/// Highest power of ten applied to synthetic mantissas.
const MAX_MAGNITUDE: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ManipulationScheme {
    /// Mantissas `10^v`, `v ~ U[0, 1)`: first digits follow Benford exactly.
    BenfordConforming,
    /// First digits uniform on 1..=9.
    UniformDigits,
    /// Benford base with probability `boost` moved onto `digit`.
    SingleDigitInflation { digit: Digit, boost: f64 },
}

impl ManipulationScheme {
    pub fn single_digit_inflation(digit: Digit, boost: f64) -> Result<Self> {
        if !(0.0..1.0).contains(&boost) {
            return Err(Error::domain(format!("boost {boost} outside [0, 1)")));
        }
        Ok(Self::SingleDigitInflation { digit, boost })
    }

    pub fn name(&self) -> String {
        match self {
            Self::BenfordConforming => "benford".to_string(),
            Self::UniformDigits => "uniform".to_string(),
            Self::SingleDigitInflation { digit, boost } => format!("inflate:{digit}:{boost}"),
        }
    }
}

/// A value in `[d, d + 1)` scaled by a random power of ten.
fn with_digit(rng: &mut impl Rng, digit: Digit) -> f64 {
    let mantissa = f64::from(digit.get()) + 0.999 * seeds::uniform(rng);
    scale(rng, mantissa)
}

fn benford_value(rng: &mut impl Rng) -> f64 {
    let mantissa = 10f64.powf(seeds::uniform(rng));
    scale(rng, mantissa)
}

fn scale(rng: &mut impl Rng, mantissa: f64) -> f64 {
    let k = rng.random_range(0..=MAX_MAGNITUDE);
    mantissa * 10f64.powi(k as i32)
}

/// `n` positive balances between 1 and 10^6 following `scheme`.
pub fn generate_synthetic(scheme: &ManipulationScheme, n: usize, seed: u64) -> Vec<f64> {
    let mut rng = seeds::child(seed, 0);
    (0..n)
        .map(|_| match *scheme {
            ManipulationScheme::BenfordConforming => benford_value(&mut rng),
            ManipulationScheme::UniformDigits => {
                let d = Digit::new(rng.random_range(1..=9u8)).expect("1..=9");
                with_digit(&mut rng, d)
            }
            ManipulationScheme::SingleDigitInflation { digit, boost } => {
                if seeds::uniform(&mut rng) < boost {
                    with_digit(&mut rng, digit)
                } else {
                    benford_value(&mut rng)
                }
            }
        })
        .collect()
}

pub const DEFAULT_CALIBRATION_BUDGET: u64 = 10_000_000_000;

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationConfig {
    pub scheme: ManipulationScheme,
    pub trials: usize,
    pub n: usize,
    pub epsilon: f64,
    pub alpha: f64,
    pub seed: u64,
    /// Ceiling on `trials × simulated draws per trial`.
    pub max_total_draws: u64,
    /// Also test each trial against the theoretical Benford distribution.
    pub compare_theoretical: bool,
}

impl CalibrationConfig {
    pub fn new(
        scheme: ManipulationScheme,
        trials: usize,
        n: usize,
        epsilon: f64,
        alpha: f64,
        seed: u64,
    ) -> Self {
        Self {
            scheme,
            trials,
            n,
            epsilon,
            alpha,
            seed,
            max_total_draws: DEFAULT_CALIBRATION_BUDGET,
            compare_theoretical: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationReport {
    pub scheme: ManipulationScheme,
    pub trials: usize,
    pub rejections: usize,
    pub rejection_rate: f64,
    /// Rejection rate of the same trials against theoretical frequencies.
    pub theoretical_rejection_rate: Option<f64>,
    pub alpha: f64,
    pub epsilon: f64,
    pub n: usize,
    pub seed: u64,
    pub lambda_star: f64,
    pub draws_per_trial: u64,
}

struct TrialOutcome {
    simulated_reject: bool,
    theoretical_reject: bool,
}

/// Runs generate → extract → simulate → test once per trial.
///
/// Trial `t` uses seed `child_seed(seed, t)`; its data and simulation use
/// sub-seeds 0 and 1 of that. Trials run in parallel and the report equals
/// the serial result.
pub fn calibrate(cfg: &CalibrationConfig) -> Result<CalibrationReport> {
    if cfg.trials == 0 {
        return Err(Error::domain("at least one trial is required"));
    }
    if cfg.n == 0 {
        return Err(Error::domain("sample size must be at least 1"));
    }
    let significance = SignificanceConfig::with_alpha(cfg.alpha)?;
    let mc_template = MonteCarloConfig::new(cfg.epsilon, cfg.n as u64, 0)?.with_max_draws(u64::MAX);
    let draws_per_trial = mc_template
        .total_draws()
        .ok_or_else(|| Error::Capacity("simulated draws per trial overflow".into()))?;
    let needed = draws_per_trial.checked_mul(cfg.trials as u64);
    if needed.is_none_or(|total| total > cfg.max_total_draws) {
        return Err(Error::Capacity(format!(
            "{} trials × {draws_per_trial} draws exceed the budget of {} draws",
            cfg.trials, cfg.max_total_draws
        )));
    }
    let theoretical = benford_distribution();

    let outcomes = (0..cfg.trials as u64)
        .into_par_iter()
        .map(|t| -> Result<TrialOutcome> {
            let trial_seed = seeds::child_seed(cfg.seed, t);
            let values = generate_synthetic(&cfg.scheme, cfg.n, seeds::child_seed(trial_seed, 0));
            let observed = extract_digit_counts(&values)?;
            let mc =
                MonteCarloConfig::new(cfg.epsilon, cfg.n as u64, seeds::child_seed(trial_seed, 1))?
                    .with_max_draws(u64::MAX);
            let sim = simulate_with(&mc, Execution::Serial)?;
            let simulated_reject =
                match benford_gof_test(&observed, &sim.pooled_frequencies, &significance) {
                    Ok(r) => r.decision == Decision::RejectH0,
                    // A digit observed but never simulated is itself a mismatch.
                    Err(Error::Domain(_)) => true,
                    Err(e) => return Err(e),
                };
            let theoretical_reject = cfg.compare_theoretical
                && benford_gof_test(&observed, &theoretical, &significance)?.decision
                    == Decision::RejectH0;
            Ok(TrialOutcome {
                simulated_reject,
                theoretical_reject,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let rejections = outcomes.iter().filter(|o| o.simulated_reject).count();
    let theoretical_rejection_rate = cfg.compare_theoretical.then(|| {
        outcomes.iter().filter(|o| o.theoretical_reject).count() as f64 / cfg.trials as f64
    });
    Ok(CalibrationReport {
        scheme: cfg.scheme,
        trials: cfg.trials,
        rejections,
        rejection_rate: rejections as f64 / cfg.trials as f64,
        theoretical_rejection_rate,
        alpha: cfg.alpha,
        epsilon: cfg.epsilon,
        n: cfg.n,
        seed: cfg.seed,
        lambda_star: crate::montecarlo::run_length(cfg.epsilon)?,
        draws_per_trial,
    })
}
