//! Builds a neutrosophic fraud probability from weighted factors and
//! shows how the outcome moves with τ.
//!
//! ```bash
//! cargo run -p fraudscreen --example neutrosophic_assessment
//! cargo run -p fraudscreen --example neutrosophic_assessment -- crates/core/tests/fixtures/factors.json
//! ```

use std::error::Error;

use fraudscreen::neutrosophic::{
    assess, interpret_outcome, is_classical, Factor, FactorAssessment, Tau,
};

fn main() -> Result<(), Box<dyn Error>> {
    let assessment = match std::env::args().nth(1) {
        Some(path) => FactorAssessment::from_json(&std::fs::read_to_string(path)?)?,
        None => FactorAssessment::new(
            vec![
                Factor::new("weak segregation of duties", 0.8, 2.0)?,
                Factor::new("unexplained lifestyle", 0.6, 1.0)?,
            ],
            vec![Factor::new("documented clerical backlog", 0.3, 1.0)?],
            vec![Factor::new("missing vouchers", 0.4, 1.0)?],
            0.05,
        )?,
    };

    let np = assess(&assessment)?;
    println!("T = {}", np.truth());
    println!("I = {}", np.indeterminacy());
    println!("U = {}", np.falsity());
    println!(
        "sup-sum = {:.4}, classical = {}",
        np.sup_sum(),
        is_classical(&np)
    );

    for tau in [0.55, 0.7, 0.75, 0.9] {
        let outcome = interpret_outcome(&np, Tau::new(tau)?);
        println!(
            "tau {tau:.2}: {} ({})",
            outcome.label.as_str(),
            outcome.rationale
        );
    }
    Ok(())
}
