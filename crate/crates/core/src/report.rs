//! Report documents and their JSON / text renderings.
//!
//! Field order is fixed by struct declaration order and every real number is
//! rounded to 10 significant digits, so identical inputs give byte-identical
//! JSON. The text form is rendered from the same JSON value and therefore
//! carries the same information.

use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gof::GofResult;
use crate::mi_matrix::{describe, MICell};
use crate::montecarlo::SimulationResult;
use crate::neutrosophic::{is_classical, FraudOutcome, NeutrosophicProbability, Tau, UnitInterval};
use crate::seeds;
use crate::synth::CalibrationReport;

pub const TOOL_NAME: &str = env!("CARGO_PKG_NAME");
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Rounds to 10 significant digits.
pub fn round_sig10(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.9e}").parse().expect("formatted float parses")
}

/// A real number serialized with 10 significant digits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(round_sig10(self.0))
    }
}

fn nums<const N: usize>(values: &[f64; N]) -> Vec<Num> {
    values.iter().copied().map(Num).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Versions {
    pub tool: String,
    pub generator: String,
}

impl Default for Versions {
    fn default() -> Self {
        Self {
            tool: format!("{TOOL_NAME} {TOOL_VERSION}"),
            generator: seeds::GENERATOR.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ExclusionSection {
    pub blank: usize,
    pub non_positive: usize,
    pub malformed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct InputSection {
    pub file: String,
    pub column: String,
    pub rows_read: usize,
    pub rows_used: usize,
    pub rows_excluded: usize,
    pub exclusions: ExclusionSection,
}

#[derive(Debug, Clone, Serialize)]
pub struct SamplingSection {
    pub method: String,
    pub n: usize,
    pub seed: u64,
    pub digit_counts: [u64; 9],
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulationSection {
    pub epsilon: Num,
    pub lambda_star: Num,
    pub epoch_size: u64,
    pub epochs: u64,
    pub total_draws: u64,
    pub seed: u64,
    pub pooled_counts: [u64; 9],
    pub pooled_frequencies: Vec<Num>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub epoch_counts: Option<Vec<[u64; 9]>>,
}

impl SimulationSection {
    pub fn from_result(sim: &SimulationResult, include_epochs: bool) -> Self {
        Self {
            epsilon: Num(sim.epsilon),
            lambda_star: Num(sim.lambda_star),
            epoch_size: sim.epoch_size,
            epochs: sim.epoch_count,
            total_draws: sim.total_draws,
            seed: sim.seed,
            pooled_counts: *sim.pooled_counts.as_array(),
            pooled_frequencies: nums(sim.pooled_frequencies.masses()),
            epoch_counts: include_epochs
                .then(|| sim.epoch_counts.iter().map(|c| *c.as_array()).collect()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CategorySection {
    pub digits: Vec<u8>,
    pub observed: Num,
    pub expected: Num,
}

#[derive(Debug, Clone, Serialize)]
pub struct GofSection {
    pub expected_source: String,
    pub statistic: Num,
    pub dof: u32,
    pub p_value: Num,
    pub alpha: Num,
    pub decision: String,
    pub observed_counts: [u64; 9],
    pub expected_counts: Vec<Num>,
    pub categories: Vec<CategorySection>,
    pub low_expected_warning: bool,
    pub warnings: Vec<String>,
}

impl GofSection {
    pub fn from_result(gof: &GofResult, expected_source: &str) -> Self {
        Self {
            expected_source: expected_source.to_string(),
            statistic: Num(gof.statistic),
            dof: gof.dof,
            p_value: Num(gof.p_value),
            alpha: Num(gof.alpha),
            decision: gof.decision.as_str().to_string(),
            observed_counts: *gof.observed_counts.as_array(),
            expected_counts: nums(&gof.expected_counts),
            categories: gof
                .categories
                .iter()
                .map(|c| CategorySection {
                    digits: c.digits.iter().map(|d| d.get()).collect(),
                    observed: Num(c.observed),
                    expected: Num(c.expected),
                })
                .collect(),
            low_expected_warning: gof.low_expected_warning,
            warnings: gof.warnings(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConditioningSection {
    pub decision: String,
    pub p_value: Num,
    pub alpha: Num,
}

#[derive(Debug, Clone, Serialize)]
pub struct NeutrosophicSection {
    pub truth: [Num; 2],
    pub indeterminacy: [Num; 2],
    pub falsity: [Num; 2],
    pub sup_sum: Num,
    pub classical: bool,
    pub tau: Num,
    pub outcome: String,
    pub rationale: String,
    pub conditioned_on: ConditioningSection,
}

fn interval(i: UnitInterval) -> [Num; 2] {
    [Num(i.lo()), Num(i.hi())]
}

impl NeutrosophicSection {
    pub fn new(
        np: &NeutrosophicProbability,
        outcome: &FraudOutcome,
        tau: Tau,
        gof: &GofResult,
    ) -> Self {
        Self {
            truth: interval(np.truth()),
            indeterminacy: interval(np.indeterminacy()),
            falsity: interval(np.falsity()),
            sup_sum: Num(np.sup_sum()),
            classical: is_classical(np),
            tau: Num(tau.get()),
            outcome: outcome.label.as_str().to_string(),
            rationale: outcome.rationale.clone(),
            conditioned_on: ConditioningSection {
                decision: gof.decision.as_str().to_string(),
                p_value: Num(gof.p_value),
                alpha: Num(gof.alpha),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MiCellSection {
    pub cell: String,
    pub involvement: u8,
    pub manipulation: u8,
    pub involvement_label: String,
    pub manipulation_label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub potentiality_note: Option<String>,
}

impl MiCellSection {
    pub fn new(cell: &MICell, potentiality_note: Option<String>) -> Self {
        let (inv, man) = describe(cell);
        Self {
            cell: cell.to_string(),
            involvement: cell.involvement.get(),
            manipulation: cell.manipulation.get(),
            involvement_label: inv.to_string(),
            manipulation_label: man.to_string(),
            potentiality_note,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScreeningReport {
    pub report: &'static str,
    pub seed: u64,
    pub input: InputSection,
    pub sampling: SamplingSection,
    pub simulation: SimulationSection,
    pub gof: GofSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neutrosophic: Option<NeutrosophicSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mi_cell: Option<MiCellSection>,
    pub notes: Vec<String>,
    pub versions: Versions,
}

#[derive(Debug, Clone, Serialize)]
pub struct SimulationReport {
    pub report: &'static str,
    pub simulation: SimulationSection,
    pub versions: Versions,
}

#[derive(Debug, Clone, Serialize)]
pub struct CalibrationSection {
    pub scheme: String,
    pub trials: usize,
    pub rejections: usize,
    pub rejection_rate: Num,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theoretical_rejection_rate: Option<Num>,
    pub alpha: Num,
    pub epsilon: Num,
    pub lambda_star: Num,
    pub draws_per_trial: u64,
    pub n: usize,
    pub seed: u64,
}

impl From<&CalibrationReport> for CalibrationSection {
    fn from(r: &CalibrationReport) -> Self {
        Self {
            scheme: r.scheme.name(),
            trials: r.trials,
            rejections: r.rejections,
            rejection_rate: Num(r.rejection_rate),
            theoretical_rejection_rate: r.theoretical_rejection_rate.map(Num),
            alpha: Num(r.alpha),
            epsilon: Num(r.epsilon),
            lambda_star: Num(r.lambda_star),
            draws_per_trial: r.draws_per_trial,
            n: r.n,
            seed: r.seed,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CalibrationDocument {
    pub report: &'static str,
    pub calibrations: Vec<CalibrationSection>,
    pub versions: Versions,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub report: &'static str,
    pub mi_cell: MiCellSection,
    pub versions: Versions,
}

/// Output encoding for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> Result<String> {
    let mut out = serde_json::to_string_pretty(report)
        .map_err(|e| Error::Numeric(format!("report serialization failed: {e}")))?;
    out.push('\n');
    Ok(out)
}

/// Indented `key: value` listing of the same JSON value.
pub fn to_text<T: Serialize>(report: &T) -> Result<String> {
    let value = serde_json::to_value(report)
        .map_err(|e| Error::Numeric(format!("report serialization failed: {e}")))?;
    let mut out = String::new();
    write_text(&value, 0, &mut out);
    Ok(out)
}

pub fn render<T: Serialize>(report: &T, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(report),
        Format::Text => to_text(report),
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(format!(
                "[{}]",
                items
                    .iter()
                    .filter_map(scalar)
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
        _ => None,
    }
}

fn write_text(value: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        write_text(v, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (idx, item) in items.iter().enumerate() {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- [{idx}] {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}- [{idx}]\n"));
                        write_text(item, depth + 1, out);
                    }
                }
            }
        }
        other => {
            if let Some(s) = scalar(other) {
                out.push_str(&format!("{pad}{s}\n"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    #[allow(clippy::approx_constant)]
    fn rounding() {
        assert_eq!(round_sig10(0.301_029_995_663_981_2), 0.3010299957);
        assert_eq!(round_sig10(123456789012.0), 123456789000.0);
        assert_eq!(round_sig10(0.0), 0.0);
        assert_eq!(
            serde_json::to_string(&Num(2.0f64.log10())).unwrap(),
            "0.3010299957"
        );
    }

    #[derive(Serialize)]
    struct Sample {
        name: &'static str,
        values: Vec<Num>,
        nested: Inner,
        list: Vec<Inner>,
    }

    #[derive(Serialize)]
    struct Inner {
        flag: bool,
    }

    #[test]
    fn text_and_json_share_fields() {
        let s = Sample {
            name: "x",
            values: vec![Num(1.0), Num(0.5)],
            nested: Inner { flag: true },
            list: vec![Inner { flag: false }],
        };
        let text = to_text(&s).unwrap();
        assert_eq!(
            text,
            "name: x\nvalues: [1.0, 0.5]\nnested:\n  flag: true\nlist:\n  - [0]\n    flag: false\n"
        );
        let json = to_json(&s).unwrap();
        assert!(json.starts_with("{\n  \"name\": \"x\""));
        assert!(json.ends_with("}\n"));
    }
}
