//! Loading account balances from delimited text and drawing the audit sample.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use log::warn;
use rand::Rng;

use crate::benford::{
    first_significant_digit_str, parse_decimal_mantissa, Digit, FirstDigitCounts,
};
use crate::error::{Error, Result};
use crate::seeds;

pub const DEFAULT_COLUMN: &str = "amount";

/// One usable balance. The first digit comes from the original token.
#[derive(Debug, Clone, PartialEq)]
pub struct LedgerRecord {
    /// Zero-based position among the data rows of the file.
    pub row_index: usize,
    pub amount_text: String,
    pub amount: f64,
    pub first_digit: Digit,
}

/// Row tallies from a load. `rows_in = used + blank + non_positive + malformed`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub rows_in: usize,
    pub used: usize,
    pub blank: usize,
    pub non_positive: usize,
    pub malformed: usize,
}

impl LoadReport {
    pub fn excluded(&self) -> usize {
        self.blank + self.non_positive + self.malformed
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Ledger {
    pub records: Vec<LedgerRecord>,
    pub report: LoadReport,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoadOptions {
    pub column: String,
    pub delimiter: u8,
}

impl Default for LoadOptions {
    fn default() -> Self {
        Self {
            column: DEFAULT_COLUMN.to_string(),
            delimiter: b',',
        }
    }
}

enum Parsed {
    Usable(f64, Digit),
    Blank,
    NonPositive,
    Malformed,
}

fn classify_token(token: &str) -> Parsed {
    let token = token.trim();
    if token.is_empty() {
        return Parsed::Blank;
    }
    if let Some(rest) = token.strip_prefix('-') {
        return if parse_decimal_mantissa(rest).is_some() {
            Parsed::NonPositive
        } else {
            Parsed::Malformed
        };
    }
    if parse_decimal_mantissa(token).is_none() {
        return Parsed::Malformed;
    }
    match token.parse::<f64>() {
        Ok(v) if !v.is_finite() => Parsed::Malformed,
        Ok(v) if v <= 0.0 => Parsed::NonPositive,
        Ok(v) => match first_significant_digit_str(token) {
            Ok(d) => Parsed::Usable(v, d),
            // Underflows to a positive float but the token has no nonzero digit.
            Err(_) => Parsed::NonPositive,
        },
        Err(_) => Parsed::Malformed,
    }
}

/// Reads the named column from a delimited file with a header row.
pub fn load_ledger(path: impl AsRef<Path>, column: &str) -> Result<Ledger> {
    load_ledger_with(
        path,
        &LoadOptions {
            column: column.to_string(),
            ..LoadOptions::default()
        },
    )
}

pub fn load_ledger_with(path: impl AsRef<Path>, options: &LoadOptions) -> Result<Ledger> {
    let path = path.as_ref();
    let file = File::open(path)
        .map_err(|e| Error::data(format!("cannot open {}: {e}", path.display())))?;
    load_ledger_from_reader(file, options).map_err(|e| match e {
        Error::Data(msg) => Error::Data(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn load_ledger_from_reader(reader: impl Read, options: &LoadOptions) -> Result<Ledger> {
    let mut csv = csv::ReaderBuilder::new()
        .delimiter(options.delimiter)
        .has_headers(true)
        .flexible(true)
        .from_reader(reader);
    let headers = csv
        .headers()
        .map_err(|e| Error::data(format!("cannot read header row: {e}")))?
        .clone();
    let col = headers
        .iter()
        .position(|h| h.trim() == options.column)
        .ok_or_else(|| Error::data(format!("no column named '{}'", options.column)))?;

    let mut report = LoadReport::default();
    let mut records = Vec::new();
    for (row_index, row) in csv.records().enumerate() {
        let row = row.map_err(|e| Error::data(format!("row {row_index}: {e}")))?;
        report.rows_in += 1;
        let token = row.get(col).unwrap_or("");
        match classify_token(token) {
            Parsed::Usable(amount, first_digit) => {
                report.used += 1;
                records.push(LedgerRecord {
                    row_index,
                    amount_text: token.trim().to_string(),
                    amount,
                    first_digit,
                });
            }
            Parsed::Blank => report.blank += 1,
            Parsed::NonPositive => {
                if token.trim().starts_with('-') {
                    warn!(
                        "row {row_index}: negative balance '{}' excluded",
                        token.trim()
                    );
                }
                report.non_positive += 1;
            }
            Parsed::Malformed => report.malformed += 1,
        }
    }
    if records.is_empty() {
        return Err(Error::data(format!(
            "no usable amounts in column '{}' ({} rows read)",
            options.column, report.rows_in
        )));
    }
    Ok(Ledger { records, report })
}

/// Tally of first digits over a set of records.
pub fn record_digit_counts(records: &[LedgerRecord]) -> FirstDigitCounts {
    records.iter().map(|r| r.first_digit).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SamplingMethod {
    /// Uniform selection without replacement.
    SimpleRandom,
    /// Random start within the first interval, then every interval-th record.
    Systematic,
}

impl SamplingMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            SamplingMethod::SimpleRandom => "simple",
            SamplingMethod::Systematic => "systematic",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SamplingPlan {
    pub method: SamplingMethod,
    pub size: usize,
    pub seed: u64,
}

/// Draws the audit sample. The result keeps the population's order.
pub fn draw_sample(records: &[LedgerRecord], plan: &SamplingPlan) -> Result<Vec<LedgerRecord>> {
    let population = records.len();
    if plan.size == 0 {
        return Err(Error::domain("sample size must be at least 1"));
    }
    if plan.size > population {
        return Err(Error::domain(format!(
            "sample size {} exceeds population of {population}",
            plan.size
        )));
    }
    let mut rng = seeds::child(plan.seed, 0);
    let mut picked: Vec<usize> = match plan.method {
        SamplingMethod::SimpleRandom => {
            let mut pool: Vec<usize> = (0..population).collect();
            for k in 0..plan.size {
                let j = rng.random_range(k as u64..population as u64) as usize;
                pool.swap(k, j);
            }
            pool.truncate(plan.size);
            pool
        }
        SamplingMethod::Systematic => {
            let interval = population / plan.size;
            let start = rng.random_range(0..interval as u64) as usize;
            (0..plan.size).map(|k| start + k * interval).collect()
        }
    };
    picked.sort_unstable();
    Ok(picked.into_iter().map(|i| records[i].clone()).collect())
}
