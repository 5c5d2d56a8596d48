//! Manipulation-involvement (MI) matrix: an 8 × 5 grid of cells `α(i, j)`.
//!
//! Rows `i` run from 8 (a single fraud by one individual) to 1 (multiple
//! frauds by a vertically collusive group); lower `i` means more complex
//! involvement. Columns `j` are the kind of manipulation, with `j = 5`
//! covering any combination of the four basic kinds.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FraudMultiplicity {
    Single,
    Multiple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PerpetratorStructure {
    Individual,
    IsolatedGroup,
    HorizontalCollusion,
    VerticalCollusion,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ManipulationKind {
    SingleEntryFalsification,
    DoubleEntryFalsification,
    NatureMisrepresentation,
    RecordSuppression,
}

impl ManipulationKind {
    pub const ALL: [ManipulationKind; 4] = [
        ManipulationKind::SingleEntryFalsification,
        ManipulationKind::DoubleEntryFalsification,
        ManipulationKind::NatureMisrepresentation,
        ManipulationKind::RecordSuppression,
    ];

    fn code(self) -> u8 {
        match self {
            ManipulationKind::SingleEntryFalsification => 1,
            ManipulationKind::DoubleEntryFalsification => 2,
            ManipulationKind::NatureMisrepresentation => 3,
            ManipulationKind::RecordSuppression => 4,
        }
    }
}

/// Row code `i` in `1..=8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvolvementCode(u8);

impl InvolvementCode {
    pub fn new(i: u8) -> Result<Self> {
        if (1..=8).contains(&i) {
            Ok(Self(i))
        } else {
            Err(Error::domain(format!("involvement code {i} outside 1..=8")))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn label(self) -> &'static str {
        INVOLVEMENT_LABELS[usize::from(self.0 - 1)]
    }
}

/// Column code `j` in `1..=5`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ManipulationCode(u8);

impl ManipulationCode {
    pub fn new(j: u8) -> Result<Self> {
        if (1..=5).contains(&j) {
            Ok(Self(j))
        } else {
            Err(Error::domain(format!(
                "manipulation code {j} outside 1..=5"
            )))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn label(self) -> &'static str {
        MANIPULATION_LABELS[usize::from(self.0 - 1)]
    }
}

const INVOLVEMENT_LABELS: [&str; 8] = [
    "Multiple frauds perpetrated by a vertically collusive group",
    "Single fraud perpetrated by a vertically collusive group",
    "Multiple frauds perpetrated by a horizontally collusive group",
    "Single fraud perpetrated by a horizontally collusive group",
    "Multiple frauds perpetrated by group of isolated individuals",
    "Single fraud perpetrated by group of isolated individuals",
    "Multiple frauds perpetrated by single individual",
    "Single fraud perpetrated by single individual",
];

const MANIPULATION_LABELS: [&str; 5] = [
    "Falsification of transaction date/amount/particulars (single-entry basis)",
    "Falsification of transaction date/amount/particulars (double-entry basis)",
    "Misrepresentation of the fundamental nature of transaction",
    "Suppression or destruction of key transaction records",
    "Combination of 1, 2, 3 and 4",
];

/// One cell `α(i, j)` of the matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MICell {
    pub involvement: InvolvementCode,
    pub manipulation: ManipulationCode,
}

impl MICell {
    pub fn new(i: u8, j: u8) -> Result<Self> {
        Ok(Self {
            involvement: InvolvementCode::new(i)?,
            manipulation: ManipulationCode::new(j)?,
        })
    }

    /// All 40 cells, row-major from `α(1,1)`.
    pub fn all() -> impl Iterator<Item = MICell> {
        (1..=8u8).flat_map(|i| {
            (1..=5u8).map(move |j| MICell {
                involvement: InvolvementCode(i),
                manipulation: ManipulationCode(j),
            })
        })
    }
}

impl fmt::Display for MICell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha_{},{}", self.involvement.0, self.manipulation.0)
    }
}

/// An investigator's description of a suspected case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseDescriptor {
    pub fraud_multiplicity: FraudMultiplicity,
    pub perpetrator_structure: PerpetratorStructure,
    manipulation_kinds: BTreeSet<ManipulationKind>,
    /// Free-text note on fraud potentiality (track records, position,
    /// remuneration). Carried through to reports; not a coded axis.
    pub potentiality_note: Option<String>,
}

impl CaseDescriptor {
    pub fn new(
        fraud_multiplicity: FraudMultiplicity,
        perpetrator_structure: PerpetratorStructure,
        manipulation_kinds: impl IntoIterator<Item = ManipulationKind>,
    ) -> Result<Self> {
        let manipulation_kinds: BTreeSet<_> = manipulation_kinds.into_iter().collect();
        if manipulation_kinds.is_empty() {
            return Err(Error::domain("at least one manipulation kind is required"));
        }
        Ok(Self {
            fraud_multiplicity,
            perpetrator_structure,
            manipulation_kinds,
            potentiality_note: None,
        })
    }

    pub fn with_potentiality_note(mut self, note: impl Into<String>) -> Self {
        self.potentiality_note = Some(note.into());
        self
    }

    pub fn manipulation_kinds(&self) -> &BTreeSet<ManipulationKind> {
        &self.manipulation_kinds
    }
}

fn involvement_row(m: FraudMultiplicity, s: PerpetratorStructure) -> u8 {
    use FraudMultiplicity::*;
    use PerpetratorStructure::*;
    match (m, s) {
        (Single, Individual) => 8,
        (Multiple, Individual) => 7,
        (Single, IsolatedGroup) => 6,
        (Multiple, IsolatedGroup) => 5,
        (Single, HorizontalCollusion) => 4,
        (Multiple, HorizontalCollusion) => 3,
        (Single, VerticalCollusion) => 2,
        (Multiple, VerticalCollusion) => 1,
    }
}

pub fn classify(case: &CaseDescriptor) -> MICell {
    let i = involvement_row(case.fraud_multiplicity, case.perpetrator_structure);
    let j = match case.manipulation_kinds.len() {
        1 => case
            .manipulation_kinds
            .iter()
            .next()
            .expect("one kind")
            .code(),
        _ => 5,
    };
    MICell {
        involvement: InvolvementCode(i),
        manipulation: ManipulationCode(j),
    }
}

/// Legend phrases `(involvement, manipulation)` for a cell.
pub fn describe(cell: &MICell) -> (&'static str, &'static str) {
    (cell.involvement.label(), cell.manipulation.label())
}
