//! Places case descriptors on the manipulation-involvement grid and prints
//! the full 8 × 5 legend.
//!
//! ```bash
//! cargo run -p fraudscreen --example classify_case
//! ```

use std::error::Error;

use fraudscreen::mi_matrix::{
    classify, describe, CaseDescriptor, FraudMultiplicity, InvolvementCode, MICell,
    ManipulationCode, ManipulationKind, PerpetratorStructure,
};

fn main() -> Result<(), Box<dyn Error>> {
    let cases = [
        CaseDescriptor::new(
            FraudMultiplicity::Single,
            PerpetratorStructure::Individual,
            [ManipulationKind::SingleEntryFalsification],
        )?,
        CaseDescriptor::new(
            FraudMultiplicity::Multiple,
            PerpetratorStructure::HorizontalCollusion,
            [
                ManipulationKind::SingleEntryFalsification,
                ManipulationKind::RecordSuppression,
            ],
        )?
        .with_potentiality_note("remuneration far above the amounts involved"),
    ];
    for case in &cases {
        let cell = classify(case);
        let (inv, man) = describe(&cell);
        println!("{cell}: {inv} / {man}");
        if let Some(note) = &case.potentiality_note {
            println!("  potentiality: {note}");
        }
    }

    println!();
    for i in 1..=8 {
        println!("{i}: {}", InvolvementCode::new(i)?.label());
    }
    for j in 1..=5 {
        println!("{j}: {}", ManipulationCode::new(j)?.label());
    }
    let cells: Vec<String> = MICell::all().map(|c| c.to_string()).collect();
    println!(
        "{} cells: {} .. {}",
        cells.len(),
        cells[0],
        cells[cells.len() - 1]
    );
    Ok(())
}
