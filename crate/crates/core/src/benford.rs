//! Benford first-digit law: probabilities, cumulative distribution and
//! first-significant-digit extraction.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A first significant digit, always in `1..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Digit(u8);

impl Digit {
    pub const MIN: Digit = Digit(1);
    pub const MAX: Digit = Digit(9);

    pub fn new(value: u8) -> Result<Self> {
        if (1..=9).contains(&value) {
            Ok(Digit(value))
        } else {
            Err(Error::domain(format!("digit {value} outside 1..=9")))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    /// Zero-based position, used to index nine-element arrays.
    pub fn index(self) -> usize {
        usize::from(self.0 - 1)
    }

    pub(crate) fn from_index(index: usize) -> Self {
        debug_assert!(index < 9);
        Digit(index as u8 + 1)
    }

    /// Digits 1 through 9 in ascending order.
    pub fn all() -> impl DoubleEndedIterator<Item = Digit> + ExactSizeIterator {
        (1..=9u8).map(Digit)
    }
}

impl fmt::Display for Digit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl TryFrom<u8> for Digit {
    type Error = Error;

    fn try_from(value: u8) -> Result<Self> {
        Digit::new(value)
    }
}

impl Serialize for Digit {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_u8(self.0)
    }
}

/// Where a [`DigitDistribution`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistributionKind {
    /// A probability model; masses sum to one within `1e-12`.
    Theoretical,
    /// Relative frequencies `count / total` observed over `total` digits.
    Empirical { total: u64 },
}

const THEORETICAL_SUM_TOLERANCE: f64 = 1e-12;

/// Probability mass (or relative frequency) over the digits 1..=9.
#[derive(Debug, Clone, PartialEq)]
pub struct DigitDistribution {
    mass: [f64; 9],
    kind: DistributionKind,
}

impl DigitDistribution {
    /// Builds a theoretical distribution, checking every mass is in `[0, 1]`
    /// and that the masses sum to one.
    pub fn new(mass: [f64; 9]) -> Result<Self> {
        for (i, m) in mass.iter().enumerate() {
            if !m.is_finite() || !(0.0..=1.0).contains(m) {
                return Err(Error::domain(format!(
                    "mass for digit {} is {m}, outside [0, 1]",
                    i + 1
                )));
            }
        }
        let sum: f64 = mass.iter().sum();
        if (sum - 1.0).abs() > THEORETICAL_SUM_TOLERANCE {
            return Err(Error::domain(format!("masses sum to {sum}, not 1")));
        }
        Ok(Self {
            mass,
            kind: DistributionKind::Theoretical,
        })
    }

    /// Relative frequencies of a set of counts. Requires at least one digit.
    pub fn from_counts(counts: &FirstDigitCounts) -> Result<Self> {
        let total = counts.total();
        if total == 0 {
            return Err(Error::domain("cannot form frequencies from zero digits"));
        }
        let mut mass = [0.0; 9];
        for (m, &c) in mass.iter_mut().zip(counts.as_array()) {
            *m = c as f64 / total as f64;
        }
        Ok(Self {
            mass,
            kind: DistributionKind::Empirical { total },
        })
    }

    pub fn mass(&self, digit: Digit) -> f64 {
        self.mass[digit.index()]
    }

    pub fn masses(&self) -> &[f64; 9] {
        &self.mass
    }

    pub fn kind(&self) -> DistributionKind {
        self.kind
    }

    pub fn sum(&self) -> f64 {
        self.mass.iter().sum()
    }
}

/// Count of first significant digits over a set of values.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct FirstDigitCounts {
    counts: [u64; 9],
}

impl FirstDigitCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_array(counts: [u64; 9]) -> Self {
        Self { counts }
    }

    pub fn record(&mut self, digit: Digit) {
        self.counts[digit.index()] += 1;
    }

    pub fn count(&self, digit: Digit) -> u64 {
        self.counts[digit.index()]
    }

    pub fn as_array(&self) -> &[u64; 9] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Adds another tally into this one.
    pub fn merge(&mut self, other: &FirstDigitCounts) {
        for (a, b) in self.counts.iter_mut().zip(other.counts.iter()) {
            *a += b;
        }
    }
}

impl FromIterator<Digit> for FirstDigitCounts {
    fn from_iter<I: IntoIterator<Item = Digit>>(iter: I) -> Self {
        let mut counts = FirstDigitCounts::new();
        for d in iter {
            counts.record(d);
        }
        counts
    }
}

/// `log10(1 + 1/d)`.
pub fn benford_probability(digit: Digit) -> f64 {
    let d = f64::from(digit.get());
    (1.0 + 1.0 / d).log10()
}

/// The nine Benford probabilities.
pub fn benford_distribution() -> DigitDistribution {
    let mut mass = [0.0; 9];
    for d in Digit::all() {
        mass[d.index()] = benford_probability(d);
    }
    DigitDistribution::new(mass).expect("Benford masses telescope to one")
}

/// `P(first digit <= d)`, evaluated in closed form as `log10(d + 1)`.
pub fn benford_cdf(digit: Digit) -> f64 {
    (f64::from(digit.get()) + 1.0).log10()
}

/// First nonzero decimal digit of a positive finite number.
///
/// Uses the shortest round-trip decimal rendering of `x`, so a value printed
/// as `0.09999999` yields 9 rather than whatever `log10` rounding suggests.
pub fn first_significant_digit(x: f64) -> Result<Digit> {
    if !x.is_finite() {
        return Err(Error::data(format!("value {x} is not finite")));
    }
    if x <= 0.0 {
        return Err(Error::data(format!("value {x} is not positive")));
    }
    let rendered = format!("{x:e}");
    rendered
        .bytes()
        .find(|b| (b'1'..=b'9').contains(b))
        .map(|b| Digit(b - b'0'))
        .ok_or_else(|| Error::data(format!("value {x} has no nonzero decimal digit")))
}

/// First significant digit of a decimal token such as `"0.0450"` or `"1.2e3"`.
///
/// The token must be a plain positive decimal number: optional `+`, digits
/// with at most one `.`, and an optional exponent. Thousands separators,
/// signs other than `+`, and zero values are rejected.
pub fn first_significant_digit_str(token: &str) -> Result<Digit> {
    let token = token.trim();
    let mantissa = parse_decimal_mantissa(token)
        .ok_or_else(|| Error::data(format!("'{token}' is not a decimal number")))?;
    mantissa
        .bytes()
        .find(|b| (b'1'..=b'9').contains(b))
        .map(|b| Digit(b - b'0'))
        .ok_or_else(|| Error::data(format!("'{token}' is zero")))
}

/// Returns the digits-and-point part of a well-formed positive decimal token.
pub(crate) fn parse_decimal_mantissa(token: &str) -> Option<&str> {
    let body = token.strip_prefix('+').unwrap_or(token);
    let (mantissa, exponent) = match body.find(['e', 'E']) {
        Some(pos) => (&body[..pos], Some(&body[pos + 1..])),
        None => (body, None),
    };
    if let Some(exp) = exponent {
        let digits = exp.strip_prefix(['+', '-']).unwrap_or(exp);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
    }
    let mut points = 0;
    let mut digits = 0;
    for b in mantissa.bytes() {
        match b {
            b'.' => points += 1,
            b'0'..=b'9' => digits += 1,
            _ => return None,
        }
    }
    if points > 1 || digits == 0 {
        return None;
    }
    Some(mantissa)
}

/// Tallies the first significant digit of every value.
///
/// The first offending value aborts the tally; its position is in the error.
pub fn extract_digit_counts(values: &[f64]) -> Result<FirstDigitCounts> {
    let mut counts = FirstDigitCounts::new();
    for (i, &v) in values.iter().enumerate() {
        let d = first_significant_digit(v).map_err(|e| match e {
            Error::Data(msg) => Error::Data(format!("index {i}: {msg}")),
            other => other,
        })?;
        counts.record(d);
    }
    Ok(counts)
}
