//! Benford first-digit fraud screening.
//!
//! The pipeline mirrors an auditor's workflow:
//!
//! 1. [`ingest`] loads account balances and draws an audit sample of size n.
//! 2. [`montecarlo`] simulates steady-state first-digit frequencies by
//!    inverse-transform sampling from the Benford CDF, in epochs of n draws.
//! 3. [`gof`] runs a Pearson χ² test of the sample digits against the
//!    simulated frequencies.
//! 4. If the test rejects, [`neutrosophic`] expresses how likely the detected
//!    manipulation is to be fraud as a (T, I, U) interval triple, and
//!    [`mi_matrix`] places the case on the manipulation-involvement grid.
//!
//! [`synth`] calibrates the test's Type I rate and power on synthetic data,
//! and [`pipeline`], [`report`] and [`cli`] wire everything together.

pub mod benford;
pub mod cli;
pub mod error;
pub mod gof;
pub mod ingest;
pub mod mi_matrix;
pub mod montecarlo;
pub mod neutrosophic;
pub mod pipeline;
pub mod report;
pub mod seeds;
pub mod special;
pub mod synth;

pub use benford::{
    benford_cdf, benford_distribution, benford_probability, extract_digit_counts,
    first_significant_digit, first_significant_digit_str, Digit, DigitDistribution,
    FirstDigitCounts,
};
pub use error::{Error, Result};
pub use gof::{benford_gof_test, chi_square_statistic, Decision, GofResult, SignificanceConfig};
pub use montecarlo::{draw_digit, run_length, simulate, MonteCarloConfig, SimulationResult};
pub use special::{chi_square_p_value, lower_regularized_gamma};
