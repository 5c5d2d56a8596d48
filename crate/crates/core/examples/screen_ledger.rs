//! Full screening run on a ledger CSV, printing the text report.
//!
//! ```bash
//! cargo run -p fraudscreen --example screen_ledger -- \
//!     crates/core/tests/fixtures/all_ones_ledger.csv 200 42 crates/core/tests/fixtures/factors.json
//! ```

use std::error::Error;

use fraudscreen::mi_matrix::MICell;
use fraudscreen::neutrosophic::FactorAssessment;
use fraudscreen::pipeline::{run_screen, ScreenConfig};
use fraudscreen::report::to_text;

fn main() -> Result<(), Box<dyn Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let input = args
        .first()
        .ok_or("usage: screen_ledger <csv> [n] [seed] [factors.json]")?;
    let n: usize = args.get(1).map_or(Ok(200), |s| s.parse())?;
    let seed: u64 = args.get(2).map_or(Ok(42), |s| s.parse())?;

    let mut cfg = ScreenConfig::new(input, n, seed);
    cfg.epsilon = 1e-8;
    if let Some(path) = args.get(3) {
        cfg.factors = Some(FactorAssessment::from_json(&std::fs::read_to_string(
            path,
        )?)?);
    }
    cfg.classification = Some((MICell::new(3, 5)?, None));

    print!("{}", to_text(&run_screen(&cfg)?)?);
    Ok(())
}
