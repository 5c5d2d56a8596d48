//! End-to-end screening: load → sample → simulate → test → assess → report.

use std::path::PathBuf;

use crate::benford::benford_distribution;
use crate::error::Result;
use crate::gof::{benford_gof_test, Decision, SignificanceConfig};
use crate::ingest::{
    draw_sample, load_ledger_with, record_digit_counts, LoadOptions, SamplingMethod, SamplingPlan,
};
use crate::mi_matrix::MICell;
use crate::montecarlo::{simulate_with, Execution, MonteCarloConfig, DEFAULT_MAX_DRAWS};
use crate::neutrosophic::{
    conditional_fraud_probability, interpret_outcome, FactorAssessment, Tau,
};
use crate::report::{
    ExclusionSection, GofSection, InputSection, MiCellSection, NeutrosophicSection,
    SamplingSection, ScreeningReport, SimulationSection, Versions,
};
use crate::seeds;

pub const DEFAULT_EPSILON: f64 = 0.005;

pub const NOTE_NO_FACTORS: &str = "neutrosophic assessment skipped: no factors supplied";
pub const NOTE_RETAINED: &str =
    "neutrosophic assessment not applicable: H0 retained, no manipulation detected";
pub const NOTE_THEORETICAL: &str =
    "expected counts use theoretical Benford probabilities (non-canonical comparison mode)";

/// Reference distribution for the expected counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExpectedSource {
    /// Pooled Monte Carlo frequencies.
    #[default]
    Simulated,
    /// Exact Benford probabilities.
    Theoretical,
}

impl ExpectedSource {
    pub fn as_str(self) -> &'static str {
        match self {
            ExpectedSource::Simulated => "simulated",
            ExpectedSource::Theoretical => "theoretical",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScreenConfig {
    pub input: PathBuf,
    pub load: LoadOptions,
    pub sample_size: usize,
    pub sample_method: SamplingMethod,
    pub epsilon: f64,
    pub significance: SignificanceConfig,
    /// Master seed; sampling and simulation use sub-seeds 0 and 1.
    pub seed: u64,
    pub factors: Option<FactorAssessment>,
    pub tau: Tau,
    pub classification: Option<(MICell, Option<String>)>,
    pub expected: ExpectedSource,
    pub execution: Execution,
    pub max_draws: u64,
}

impl ScreenConfig {
    pub fn new(input: impl Into<PathBuf>, sample_size: usize, seed: u64) -> Self {
        Self {
            input: input.into(),
            load: LoadOptions::default(),
            sample_size,
            sample_method: SamplingMethod::SimpleRandom,
            epsilon: DEFAULT_EPSILON,
            significance: SignificanceConfig::default(),
            seed,
            factors: None,
            tau: Tau::default(),
            classification: None,
            expected: ExpectedSource::Simulated,
            execution: Execution::Parallel,
            max_draws: DEFAULT_MAX_DRAWS,
        }
    }
}

pub fn run_screen(cfg: &ScreenConfig) -> Result<ScreeningReport> {
    let ledger = load_ledger_with(&cfg.input, &cfg.load)?;
    let plan = SamplingPlan {
        method: cfg.sample_method,
        size: cfg.sample_size,
        seed: seeds::child_seed(cfg.seed, 0),
    };
    let sample = draw_sample(&ledger.records, &plan)?;
    let observed = record_digit_counts(&sample);

    let mc = MonteCarloConfig::new(
        cfg.epsilon,
        cfg.sample_size as u64,
        seeds::child_seed(cfg.seed, 1),
    )?
    .with_max_draws(cfg.max_draws);
    let sim = simulate_with(&mc, cfg.execution)?;

    let mut notes = Vec::new();
    let reference = match cfg.expected {
        ExpectedSource::Simulated => sim.pooled_frequencies.clone(),
        ExpectedSource::Theoretical => {
            notes.push(NOTE_THEORETICAL.to_string());
            benford_distribution()
        }
    };
    let gof = benford_gof_test(&observed, &reference, &cfg.significance)?;

    let neutrosophic = match (&cfg.factors, gof.decision) {
        (_, Decision::RetainH0) => {
            notes.push(NOTE_RETAINED.to_string());
            None
        }
        (None, Decision::RejectH0) => {
            notes.push(NOTE_NO_FACTORS.to_string());
            None
        }
        (Some(factors), Decision::RejectH0) => {
            let np = conditional_fraud_probability(&gof, factors)?;
            let outcome = interpret_outcome(&np, cfg.tau);
            Some(NeutrosophicSection::new(&np, &outcome, cfg.tau, &gof))
        }
    };

    Ok(ScreeningReport {
        report: "screen",
        seed: cfg.seed,
        input: InputSection {
            file: cfg.input.display().to_string(),
            column: cfg.load.column.clone(),
            rows_read: ledger.report.rows_in,
            rows_used: ledger.report.used,
            rows_excluded: ledger.report.excluded(),
            exclusions: ExclusionSection {
                blank: ledger.report.blank,
                non_positive: ledger.report.non_positive,
                malformed: ledger.report.malformed,
            },
        },
        sampling: SamplingSection {
            method: plan.method.as_str().to_string(),
            n: plan.size,
            seed: plan.seed,
            digit_counts: *observed.as_array(),
        },
        simulation: SimulationSection::from_result(&sim, false),
        gof: GofSection::from_result(&gof, cfg.expected.as_str()),
        neutrosophic,
        mi_cell: cfg
            .classification
            .as_ref()
            .map(|(cell, note)| MiCellSection::new(cell, note.clone())),
        notes,
        versions: Versions::default(),
    })
}
