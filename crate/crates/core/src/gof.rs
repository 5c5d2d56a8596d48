//! Pearson χ² goodness-of-fit between observed first-digit counts and a
//! simulated (or theoretical) digit distribution.
//!
//! H₀: the observed first digits follow the reference distribution.
//! H₁: they do not. Rejection only establishes that the digits were
//! manipulated at the chosen significance level, not that fraud occurred.

use serde::Serialize;

use crate::benford::{Digit, DigitDistribution, FirstDigitCounts};
use crate::error::{Error, Result};
use crate::special::chi_square_p_value;

const TOTAL_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignificanceConfig {
    pub alpha: f64,
    /// Cochran threshold below which expected counts raise a warning.
    pub min_expected: f64,
    /// Merge sparse categories, starting from digit 9, until each merged
    /// category reaches `min_expected`.
    pub pool_low_expected: bool,
}

impl Default for SignificanceConfig {
    fn default() -> Self {
        Self {
            alpha: 0.05,
            min_expected: 5.0,
            pool_low_expected: false,
        }
    }
}

impl SignificanceConfig {
    pub fn new(alpha: f64, min_expected: f64, pool_low_expected: bool) -> Result<Self> {
        let cfg = Self {
            alpha,
            min_expected,
            pool_low_expected,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_alpha(alpha: f64) -> Result<Self> {
        Self::new(alpha, 5.0, false)
    }

    fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::domain(format!(
                "alpha {} outside (0, 1)",
                self.alpha
            )));
        }
        if !(self.min_expected >= 0.0 && self.min_expected.is_finite()) {
            return Err(Error::domain(format!(
                "min_expected {} must be non-negative",
                self.min_expected
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Decision {
    RetainH0,
    RejectH0,
}

impl Decision {
    pub fn as_str(self) -> &'static str {
        match self {
            Decision::RetainH0 => "RetainH0",
            Decision::RejectH0 => "RejectH0",
        }
    }
}

/// Digits tested together as one χ² category.
#[derive(Debug, Clone, PartialEq)]
pub struct Category {
    pub digits: Vec<Digit>,
    pub observed: f64,
    pub expected: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GofResult {
    pub statistic: f64,
    pub dof: u32,
    pub p_value: f64,
    pub alpha: f64,
    pub decision: Decision,
    /// Per-digit expected counts `mass(d) × total`, before any pooling.
    pub expected_counts: [f64; 9],
    pub observed_counts: FirstDigitCounts,
    pub low_expected_warning: bool,
    pub min_expected: f64,
    /// Categories actually entering the statistic.
    pub categories: Vec<Category>,
}

impl GofResult {
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.low_expected_warning {
            let low: Vec<String> = Digit::all()
                .filter(|d| self.expected_counts[d.index()] < self.min_expected)
                .map(|d| d.to_string())
                .collect();
            out.push(format!(
                "expected count below {} for digit(s) {}; chi-square approximation is fragile",
                self.min_expected,
                low.join(",")
            ));
        }
        let tested: usize = self.categories.iter().map(|c| c.digits.len()).sum();
        if tested < 9 {
            out.push(format!(
                "{} digit(s) with zero simulated and zero observed mass dropped from the test",
                9 - tested
            ));
        }
        if self.categories.iter().any(|c| c.digits.len() > 1) {
            out.push(format!(
                "sparse categories pooled; {} categories tested",
                self.categories.len()
            ));
        }
        out
    }
}

/// `Σ (O − E)² / E` over the nine digits.
pub fn chi_square_statistic(observed: &FirstDigitCounts, expected: &[f64; 9]) -> Result<f64> {
    if let Some((i, e)) = expected
        .iter()
        .enumerate()
        .find(|(_, e)| e.is_nan() || **e <= 0.0)
    {
        return Err(Error::domain(format!(
            "expected count for digit {} is {e}; must be positive",
            i + 1
        )));
    }
    let total = observed.total() as f64;
    let expected_total: f64 = expected.iter().sum();
    if (expected_total - total).abs() > TOTAL_TOLERANCE {
        return Err(Error::data(format!(
            "expected counts sum to {expected_total}, observed total is {total}"
        )));
    }
    Ok(observed
        .as_array()
        .iter()
        .zip(expected)
        .map(|(&o, &e)| {
            let diff = o as f64 - e;
            diff * diff / e
        })
        .sum())
}

fn statistic_over(categories: &[Category]) -> f64 {
    categories
        .iter()
        .map(|c| {
            let diff = c.observed - c.expected;
            diff * diff / c.expected
        })
        .sum()
}

/// Merges categories from digit 9 downward until each merged group reaches
/// `min_expected`. A short remainder joins the last closed group.
fn pool_categories(categories: Vec<Category>, min_expected: f64) -> Vec<Category> {
    let mut closed: Vec<Category> = Vec::new();
    let mut open: Option<Category> = None;
    for cat in categories.into_iter().rev() {
        let mut group = match open.take() {
            Some(mut g) => {
                g.digits.extend(cat.digits);
                g.observed += cat.observed;
                g.expected += cat.expected;
                g
            }
            None => cat,
        };
        if group.expected >= min_expected {
            group.digits.sort();
            closed.push(group);
        } else {
            open = Some(group);
        }
    }
    if let Some(rest) = open {
        match closed.last_mut() {
            Some(last) => {
                last.digits.extend(rest.digits);
                last.digits.sort();
                last.observed += rest.observed;
                last.expected += rest.expected;
            }
            None => {
                let mut rest = rest;
                rest.digits.sort();
                closed.push(rest);
            }
        }
    }
    closed.reverse();
    closed
}

/// Tests observed first-digit counts against a reference distribution.
///
/// Digits whose reference mass and observed count are both zero carry no
/// information and are left out of the statistic, reducing the degrees of
/// freedom.
pub fn benford_gof_test(
    observed: &FirstDigitCounts,
    reference: &DigitDistribution,
    cfg: &SignificanceConfig,
) -> Result<GofResult> {
    cfg.validate()?;
    let total = observed.total();
    if total == 0 {
        return Err(Error::domain("no observed digits to test"));
    }
    if (reference.sum() - 1.0).abs() > 1e-9 {
        return Err(Error::domain(format!(
            "reference frequencies sum to {}, not 1",
            reference.sum()
        )));
    }

    let mut expected_counts = [0.0; 9];
    let mut categories = Vec::with_capacity(9);
    for d in Digit::all() {
        let expected = reference.mass(d) * total as f64;
        expected_counts[d.index()] = expected;
        let count = observed.count(d);
        if expected > 0.0 {
            categories.push(Category {
                digits: vec![d],
                observed: count as f64,
                expected,
            });
        } else if count > 0 {
            return Err(Error::domain(format!(
                "digit {d} observed {count} time(s) but never simulated; use a longer simulation run (smaller epsilon)"
            )));
        }
    }
    let low_expected_warning = expected_counts.iter().any(|&e| e < cfg.min_expected);
    if cfg.pool_low_expected {
        categories = pool_categories(categories, cfg.min_expected);
    }
    if categories.len() < 2 {
        return Err(Error::domain(
            "fewer than two categories remain; the test has no degrees of freedom",
        ));
    }
    let dof = (categories.len() - 1) as u32;
    let statistic = statistic_over(&categories);
    let p_value = chi_square_p_value(statistic, dof)?;
    let decision = if p_value < cfg.alpha {
        Decision::RejectH0
    } else {
        Decision::RetainH0
    };
    Ok(GofResult {
        statistic,
        dof,
        p_value,
        alpha: cfg.alpha,
        decision,
        expected_counts,
        observed_counts: *observed,
        low_expected_warning,
        min_expected: cfg.min_expected,
        categories,
    })
}
