//! Neutrosophic assessment of whether a detected manipulation is fraudulent.
//!
//! Once H₀ has been rejected, the digits are taken to be manipulated; that
//! alone says nothing about fraud. Given that the rejection was not a Type I
//! error (event Eᶜ), the probability that fraud is actually present,
//! `NP(F | Eᶜ)`, is represented as a triple of sub-intervals of `[0, 1]`:
//!
//! * `T`, where the event is true to degree `t`, driven by factors such as
//!   the organization's fraud history, employees' propensity to commit fraud
//!   and the effectiveness of internal controls;
//! * `U`, where it is untrue to degree `u`, driven by the personal track
//!   records, positions and remuneration of the employees involved;
//! * `I`, where it is indeterminate to degree `i`, driven by mutually
//!   inconsistent circumstantial evidence.
//!
//! Unlike a classical probability, the suprema may add up to 3. With no
//! indeterminacy and complementary point-valued truth and falsity the triple
//! is an ordinary probability.
//!
//! Each component is quantified here as a weighted mean of factor scores
//! widened by a fixed half-width. That scheme belongs to this crate; the
//! factors themselves are qualitative inputs from the investigator.

use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::gof::{Decision, GofResult};

/// Upper bound on `t.hi + i.hi + u.hi`.
pub const SUP_SUM_BOUND: f64 = 3.0;

const CLASSICAL_TOLERANCE: f64 = 1e-12;

/// A closed interval `[lo, hi]` with `0 <= lo <= hi <= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitInterval {
    lo: f64,
    hi: f64,
}

impl UnitInterval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_nan() || lo < 0.0 {
            return Err(Error::domain(format!(
                "interval lower bound {lo} is below 0"
            )));
        }
        if hi.is_nan() || hi > 1.0 {
            return Err(Error::domain(format!(
                "interval upper bound {hi} exceeds 1"
            )));
        }
        if lo > hi {
            return Err(Error::domain(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(Self { lo, hi })
    }

    pub fn point(p: f64) -> Result<Self> {
        Self::new(p, p)
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for UnitInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Truth, indeterminacy and falsity sub-spaces of an event.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NeutrosophicProbability {
    t: UnitInterval,
    i: UnitInterval,
    u: UnitInterval,
}

/// Validates and assembles a triple.
pub fn make_neutrosophic(
    t: UnitInterval,
    i: UnitInterval,
    u: UnitInterval,
) -> Result<NeutrosophicProbability> {
    let sup = t.hi + i.hi + u.hi;
    if sup > SUP_SUM_BOUND {
        return Err(Error::domain(format!(
            "sup-sum {sup} exceeds the neutrosophic bound {SUP_SUM_BOUND}"
        )));
    }
    let inf = t.lo + i.lo + u.lo;
    if inf < 0.0 {
        return Err(Error::domain(format!("inf-sum {inf} is negative")));
    }
    Ok(NeutrosophicProbability { t, i, u })
}

impl NeutrosophicProbability {
    pub fn new(t: UnitInterval, i: UnitInterval, u: UnitInterval) -> Result<Self> {
        make_neutrosophic(t, i, u)
    }

    /// Convenience constructor from `(lo, hi)` pairs.
    pub fn from_bounds(t: (f64, f64), i: (f64, f64), u: (f64, f64)) -> Result<Self> {
        make_neutrosophic(
            UnitInterval::new(t.0, t.1)?,
            UnitInterval::new(i.0, i.1)?,
            UnitInterval::new(u.0, u.1)?,
        )
    }

    pub fn truth(&self) -> UnitInterval {
        self.t
    }

    pub fn indeterminacy(&self) -> UnitInterval {
        self.i
    }

    pub fn falsity(&self) -> UnitInterval {
        self.u
    }

    pub fn sup_sum(&self) -> f64 {
        self.t.hi + self.i.hi + self.u.hi
    }

    pub fn inf_sum(&self) -> f64 {
        self.t.lo + self.i.lo + self.u.lo
    }

    /// The same triple with truth and falsity exchanged.
    pub fn swap_truth_falsity(&self) -> Self {
        Self {
            t: self.u,
            i: self.i,
            u: self.t,
        }
    }
}

/// True when the triple is an ordinary probability: no indeterminacy and
/// point-valued truth and falsity summing to one.
pub fn is_classical(np: &NeutrosophicProbability) -> bool {
    np.i.lo == 0.0
        && np.i.hi == 0.0
        && np.t.is_degenerate()
        && np.u.is_degenerate()
        && (np.t.lo + np.u.lo - 1.0).abs() <= CLASSICAL_TOLERANCE
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactor {
    name: String,
    score: f64,
    weight: f64,
}

/// A named input to one component, scored in `[0, 1]` with a positive weight.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(try_from = "RawFactor")]
pub struct Factor {
    pub name: String,
    score: f64,
    weight: f64,
}

impl Factor {
    pub fn new(name: impl Into<String>, score: f64, weight: f64) -> Result<Self> {
        let name = name.into();
        if !(0.0..=1.0).contains(&score) {
            return Err(Error::domain(format!(
                "factor '{name}': score {score} outside [0, 1]"
            )));
        }
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::domain(format!(
                "factor '{name}': weight {weight} must be positive"
            )));
        }
        Ok(Self {
            name,
            score,
            weight,
        })
    }

    pub fn score(&self) -> f64 {
        self.score
    }

    pub fn weight(&self) -> f64 {
        self.weight
    }
}

impl TryFrom<RawFactor> for Factor {
    type Error = Error;

    fn try_from(raw: RawFactor) -> Result<Self> {
        Factor::new(raw.name, raw.score, raw.weight)
    }
}

pub const DEFAULT_WIDTH: f64 = 0.1;

fn default_width() -> f64 {
    DEFAULT_WIDTH
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAssessment {
    truth: Vec<Factor>,
    falsity: Vec<Factor>,
    indeterminacy: Vec<Factor>,
    #[serde(default = "default_width")]
    width: f64,
}

/// Factor lists for the three components plus the interval half-width.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(try_from = "RawAssessment")]
pub struct FactorAssessment {
    pub truth: Vec<Factor>,
    pub falsity: Vec<Factor>,
    pub indeterminacy: Vec<Factor>,
    width: f64,
}

impl TryFrom<RawAssessment> for FactorAssessment {
    type Error = Error;

    fn try_from(raw: RawAssessment) -> Result<Self> {
        FactorAssessment::new(raw.truth, raw.falsity, raw.indeterminacy, raw.width)
    }
}

impl FactorAssessment {
    pub fn new(
        truth: Vec<Factor>,
        falsity: Vec<Factor>,
        indeterminacy: Vec<Factor>,
        width: f64,
    ) -> Result<Self> {
        if !(0.0..=0.5).contains(&width) {
            return Err(Error::domain(format!("width {width} outside [0, 0.5]")));
        }
        Ok(Self {
            truth,
            falsity,
            indeterminacy,
            width,
        })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    /// Parses the JSON factors format. Errors carry line and column.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::data(format!("factors file: {e}")))
    }
}

/// Weighted mean of the scores, widened by `width` and clipped to `[0, 1]`.
pub fn aggregate_component(factors: &[Factor], width: f64) -> Result<UnitInterval> {
    if factors.is_empty() {
        return Err(Error::domain("cannot aggregate an empty factor list"));
    }
    if !(0.0..=0.5).contains(&width) {
        return Err(Error::domain(format!("width {width} outside [0, 0.5]")));
    }
    let weight: f64 = factors.iter().map(|f| f.weight).sum();
    let weighted: f64 = factors.iter().map(|f| f.weight * f.score).sum();
    let p = (weighted / weight).clamp(0.0, 1.0);
    UnitInterval::new((p - width).max(0.0), (p + width).min(1.0))
}

pub fn assess(assessment: &FactorAssessment) -> Result<NeutrosophicProbability> {
    let component = |name: &str, factors: &[Factor]| {
        aggregate_component(factors, assessment.width).map_err(|e| match e {
            Error::Domain(msg) => Error::Domain(format!("{name}: {msg}")),
            other => other,
        })
    };
    make_neutrosophic(
        component("truth", &assessment.truth)?,
        component("indeterminacy", &assessment.indeterminacy)?,
        component("falsity", &assessment.falsity)?,
    )
}

/// `NP(F | Eᶜ)`: defined only once the test has rejected H₀.
///
/// The test supplies the conditioning event, not a number; the triple does
/// not depend on the p-value.
pub fn conditional_fraud_probability(
    gof: &GofResult,
    assessment: &FactorAssessment,
) -> Result<NeutrosophicProbability> {
    if gof.decision == Decision::RetainH0 {
        return Err(Error::Precondition(
            "no manipulation detected; NP(F|E^c) undefined".to_string(),
        ));
    }
    assess(assessment)
}

/// Decision threshold for the definite outcomes, in `(0.5, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tau(f64);

impl Tau {
    pub fn new(value: f64) -> Result<Self> {
        if value > 0.5 && value <= 1.0 {
            Ok(Tau(value))
        } else {
            Err(Error::domain(format!("tau {value} outside (0.5, 1]")))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl Default for Tau {
    fn default() -> Self {
        Tau(0.75)
    }
}

/// How a confirmed manipulation is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OutcomeLabel {
    DefinitelyFraudulent,
    MayOrMayNotBeFraudulent,
    DefinitelyNotFraudulent,
}

impl OutcomeLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            OutcomeLabel::DefinitelyFraudulent => "DefinitelyFraudulent",
            OutcomeLabel::MayOrMayNotBeFraudulent => "MayOrMayNotBeFraudulent",
            OutcomeLabel::DefinitelyNotFraudulent => "DefinitelyNotFraudulent",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FraudOutcome {
    pub label: OutcomeLabel,
    pub rationale: String,
}

pub fn interpret_outcome(np: &NeutrosophicProbability, tau: Tau) -> FraudOutcome {
    let tau = tau.get();
    let floor = 1.0 - tau;
    let (t, u) = (np.t, np.u);
    let (label, rationale) = if t.lo >= tau && u.hi <= floor {
        (
            OutcomeLabel::DefinitelyFraudulent,
            format!(
                "truth lower bound {:.4} >= {tau:.4} and falsity upper bound {:.4} <= {floor:.4}",
                t.lo, u.hi
            ),
        )
    } else if u.lo >= tau && t.hi <= floor {
        (
            OutcomeLabel::DefinitelyNotFraudulent,
            format!(
                "falsity lower bound {:.4} >= {tau:.4} and truth upper bound {:.4} <= {floor:.4}",
                u.lo, t.hi
            ),
        )
    } else {
        (
            OutcomeLabel::MayOrMayNotBeFraudulent,
            format!(
                "neither truth [{:.4}, {:.4}] nor falsity [{:.4}, {:.4}] clears threshold {tau:.4}",
                t.lo, t.hi, u.lo, u.hi
            ),
        )
    };
    FraudOutcome { label, rationale }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn f(name: &str, score: f64, weight: f64) -> Factor {
        Factor::new(name, score, weight).unwrap()
    }

    #[test]
    fn triple_construction() {
        assert!(NeutrosophicProbability::from_bounds((0.5, 0.5), (0.0, 0.0), (0.5, 0.5)).is_ok());
        let full =
            NeutrosophicProbability::from_bounds((1.0, 1.0), (1.0, 1.0), (1.0, 1.0)).unwrap();
        assert_eq!(full.sup_sum(), 3.0);
        let err = UnitInterval::new(0.9, 1.1).unwrap_err();
        assert!(err.to_string().contains("exceeds 1"), "{err}");
        assert!(UnitInterval::new(-0.1, 0.2).is_err());
        assert!(UnitInterval::new(0.6, 0.4).is_err());
        assert!(UnitInterval::new(f64::NAN, 0.4).is_err());
    }

    #[test]
    fn classical_cases() {
        let coin =
            NeutrosophicProbability::from_bounds((0.5, 0.5), (0.0, 0.0), (0.5, 0.5)).unwrap();
        assert!(is_classical(&coin));
        let wide =
            NeutrosophicProbability::from_bounds((0.3, 0.4), (0.0, 0.0), (0.6, 0.7)).unwrap();
        assert!(!is_classical(&wide));
        let short =
            NeutrosophicProbability::from_bounds((0.7, 0.7), (0.0, 0.0), (0.2, 0.2)).unwrap();
        assert!(!is_classical(&short));
    }

    #[test]
    fn aggregate_examples() {
        let r = aggregate_component(&[f("x", 0.6, 1.0)], 0.1).unwrap();
        assert_abs_diff_eq!(r.lo(), 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(r.hi(), 0.7, epsilon = 1e-12);

        let r = aggregate_component(&[f("a", 1.0, 1.0), f("b", 0.0, 1.0)], 0.0).unwrap();
        assert_eq!((r.lo(), r.hi()), (0.5, 0.5));

        // (0.9·3 + 0.1·1) / 4 = 0.7
        let r = aggregate_component(&[f("a", 0.9, 3.0), f("b", 0.1, 1.0)], 0.1).unwrap();
        assert_abs_diff_eq!(r.lo(), 0.6, epsilon = 1e-12);
        assert_abs_diff_eq!(r.hi(), 0.8, epsilon = 1e-12);

        assert!(aggregate_component(&[], 0.1).is_err());
        let r = aggregate_component(&[f("edge", 0.95, 1.0)], 0.1).unwrap();
        assert_eq!(r.hi(), 1.0);
    }

    #[test]
    fn factor_validation() {
        assert!(Factor::new("a", 1.5, 1.0).is_err());
        assert!(Factor::new("a", 0.5, 0.0).is_err());
        assert!(Factor::new("a", 0.5, -2.0).is_err());
        assert!(FactorAssessment::new(vec![], vec![], vec![], 0.6).is_err());
    }

    #[test]
    fn assess_extremes_and_symmetry() {
        let a = FactorAssessment::new(
            vec![f("history", 1.0, 2.0), f("controls", 1.0, 1.0)],
            vec![f("record", 0.0, 1.0)],
            vec![f("inconsistency", 0.0, 1.0)],
            0.0,
        )
        .unwrap();
        let np = assess(&a).unwrap();
        assert_eq!(
            np,
            NeutrosophicProbability::from_bounds((1.0, 1.0), (0.0, 0.0), (0.0, 0.0)).unwrap()
        );

        let list = vec![f("p", 0.3, 1.0), f("q", 0.8, 2.5)];
        let sym = FactorAssessment::new(list.clone(), list, vec![f("i", 0.2, 1.0)], 0.1).unwrap();
        let np = assess(&sym).unwrap();
        assert_eq!(np.truth(), np.falsity());
    }

    #[test]
    fn assess_requires_every_list() {
        let a = FactorAssessment::new(vec![f("t", 0.5, 1.0)], vec![], vec![f("i", 0.1, 1.0)], 0.1)
            .unwrap();
        let err = assess(&a).unwrap_err();
        assert!(err.to_string().contains("falsity"), "{err}");
    }

    #[test]
    fn outcome_examples() {
        let tau = Tau::default();
        let np =
            NeutrosophicProbability::from_bounds((0.9, 0.95), (0.0, 0.1), (0.0, 0.05)).unwrap();
        assert_eq!(
            interpret_outcome(&np, tau).label,
            OutcomeLabel::DefinitelyFraudulent
        );
        let np = NeutrosophicProbability::from_bounds((0.1, 0.2), (0.1, 0.3), (0.8, 0.9)).unwrap();
        assert_eq!(
            interpret_outcome(&np, tau).label,
            OutcomeLabel::DefinitelyNotFraudulent
        );
        let np = NeutrosophicProbability::from_bounds((0.4, 0.6), (0.3, 0.5), (0.3, 0.5)).unwrap();
        assert_eq!(
            interpret_outcome(&np, tau).label,
            OutcomeLabel::MayOrMayNotBeFraudulent
        );
    }

    #[test]
    fn tau_range() {
        assert!(Tau::new(0.5).is_err());
        assert!(Tau::new(1.0).is_ok());
        assert!(Tau::new(1.01).is_err());
        assert_eq!(Tau::default().get(), 0.75);
    }

    #[test]
    fn parses_factor_file() {
        let text = r#"{
            "truth": [{"name": "past fraud", "score": 0.8, "weight": 2}],
            "falsity": [{"name": "track record", "score": 0.2, "weight": 1}],
            "indeterminacy": [{"name": "inconsistent evidence", "score": 0.3, "weight": 1}],
            "width": 0.05
        }"#;
        let a = FactorAssessment::from_json(text).unwrap();
        assert_eq!(a.width(), 0.05);
        assert_eq!(a.truth[0].name, "past fraud");

        let no_width = r#"{"truth": [], "falsity": [], "indeterminacy": []}"#;
        assert_eq!(
            FactorAssessment::from_json(no_width).unwrap().width(),
            DEFAULT_WIDTH
        );
    }

    #[test]
    fn factor_file_errors_name_the_line() {
        let text = "{\n  \"truth\": [{\"name\": \"a\", \"score\": 0.5, \"weight\": 1}],\n  \"falsity\": [{\"name\": \"b\", \"score\": 1.7, \"weight\": 1}],\n  \"indeterminacy\": []\n}";
        let err = FactorAssessment::from_json(text).unwrap_err().to_string();
        assert!(err.contains("line 3"), "{err}");
        assert!(err.contains("score 1.7"), "{err}");

        let unknown = "{\"truth\": [], \"falsity\": [], \"indeterminacy\": [], \"colour\": 1}";
        let err = FactorAssessment::from_json(unknown)
            .unwrap_err()
            .to_string();
        assert!(err.contains("colour"), "{err}");
    }

    fn factor_list() -> impl Strategy<Value = Vec<Factor>> {
        prop::collection::vec((0.0f64..=1.0, 0.01f64..10.0), 1..6).prop_map(|v| {
            v.into_iter()
                .enumerate()
                .map(|(k, (s, w))| Factor::new(format!("f{k}"), s, w).unwrap())
                .collect()
        })
    }

    proptest! {
        #[test]
        fn raising_a_truth_score_never_lowers_t(
            truth in factor_list(),
            which in 0usize..6,
            bump in 0.0f64..1.0,
            width in 0.0f64..=0.5,
        ) {
            let k = which % truth.len();
            let mut raised = truth.clone();
            let s = (raised[k].score() + bump).min(1.0);
            raised[k] = Factor::new("raised", s, raised[k].weight()).unwrap();
            let before = aggregate_component(&truth, width).unwrap();
            let after = aggregate_component(&raised, width).unwrap();
            prop_assert!(after.lo() >= before.lo() - 1e-12);
            prop_assert!(after.hi() >= before.hi() - 1e-12);
        }
    }
}
