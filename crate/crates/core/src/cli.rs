//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Exit status: 0 for a completed run whatever the test decided, 2 for usage
//! errors, 3 for data errors, 4 for numeric or capacity errors.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::benford::Digit;
use crate::error::{Error, Result};
use crate::gof::SignificanceConfig;
use crate::ingest::{LoadOptions, SamplingMethod, DEFAULT_COLUMN};
use crate::mi_matrix::{
    classify, CaseDescriptor, FraudMultiplicity, MICell, ManipulationKind, PerpetratorStructure,
};
use crate::montecarlo::{simulate_with, Execution, MonteCarloConfig, DEFAULT_MAX_DRAWS};
use crate::neutrosophic::{FactorAssessment, Tau};
use crate::pipeline::{run_screen, ExpectedSource, ScreenConfig, DEFAULT_EPSILON};
use crate::report::{
    render, CalibrationDocument, CalibrationSection, ClassificationReport, Format, MiCellSection,
    SimulationReport, SimulationSection, Versions,
};
use crate::synth::{calibrate, CalibrationConfig, ManipulationScheme, DEFAULT_CALIBRATION_BUDGET};

#[derive(Debug, Parser)]
#[command(
    name = "fraudscreen",
    version,
    about = "Benford first-digit fraud screening"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample a ledger, simulate steady-state digits and run the χ² test.
    Screen(ScreenArgs),
    /// Run the Monte Carlo digit simulation alone.
    Simulate(SimulateArgs),
    /// Measure rejection rates on synthetic data.
    Calibrate(CalibrateArgs),
    /// Place a case on the manipulation-involvement matrix.
    Classify(ClassifyArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "json")]
    pub format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SampleMethodArg {
    Simple,
    Systematic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ExpectedArg {
    Simulated,
    /// Non-canonical: compare against exact Benford probabilities.
    Theoretical,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum MultiplicityArg {
    Single,
    Multiple,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum StructureArg {
    Individual,
    IsolatedGroup,
    Horizontal,
    Vertical,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum KindArg {
    SingleEntry,
    DoubleEntry,
    Misrepresentation,
    Suppression,
}

#[derive(Debug, Clone, Args, Default)]
pub struct CaseArgs {
    #[arg(long, value_enum)]
    pub fraud_multiplicity: Option<MultiplicityArg>,
    #[arg(long, value_enum)]
    pub structure: Option<StructureArg>,
    /// Manipulation kinds, comma separated.
    #[arg(long, value_enum, value_delimiter = ',')]
    pub kinds: Vec<KindArg>,
    /// Free-text note on fraud potentiality carried into the report.
    #[arg(long)]
    pub potentiality: Option<String>,
}

impl CaseArgs {
    fn any(&self) -> bool {
        self.fraud_multiplicity.is_some() || self.structure.is_some() || !self.kinds.is_empty()
    }

    fn descriptor(&self) -> Result<CaseDescriptor> {
        let multiplicity = match self.fraud_multiplicity {
            Some(MultiplicityArg::Single) => FraudMultiplicity::Single,
            Some(MultiplicityArg::Multiple) => FraudMultiplicity::Multiple,
            None => return Err(Error::domain("--fraud-multiplicity is required")),
        };
        let structure = match self.structure {
            Some(StructureArg::Individual) => PerpetratorStructure::Individual,
            Some(StructureArg::IsolatedGroup) => PerpetratorStructure::IsolatedGroup,
            Some(StructureArg::Horizontal) => PerpetratorStructure::HorizontalCollusion,
            Some(StructureArg::Vertical) => PerpetratorStructure::VerticalCollusion,
            None => return Err(Error::domain("--structure is required")),
        };
        let kinds = self.kinds.iter().map(|k| match k {
            KindArg::SingleEntry => ManipulationKind::SingleEntryFalsification,
            KindArg::DoubleEntry => ManipulationKind::DoubleEntryFalsification,
            KindArg::Misrepresentation => ManipulationKind::NatureMisrepresentation,
            KindArg::Suppression => ManipulationKind::RecordSuppression,
        });
        let mut case = CaseDescriptor::new(multiplicity, structure, kinds)
            .map_err(|_| Error::domain("--kinds needs at least one manipulation kind"))?;
        if let Some(note) = &self.potentiality {
            case = case.with_potentiality_note(note.clone());
        }
        Ok(case)
    }
}

#[derive(Debug, Clone, Args)]
pub struct ScreenArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value = DEFAULT_COLUMN)]
    pub column: String,
    #[arg(long, default_value = ",")]
    pub delimiter: char,
    #[arg(long)]
    pub sample_size: usize,
    #[arg(long, value_enum, default_value = "simple")]
    pub sample_method: SampleMethodArg,
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSON file with truth/falsity/indeterminacy factor lists.
    #[arg(long)]
    pub factors: Option<PathBuf>,
    #[arg(long, default_value_t = 0.75)]
    pub tau: f64,
    /// MI-matrix row code (1..=8); use with --manipulation.
    #[arg(long)]
    pub involvement: Option<u8>,
    /// MI-matrix column code (1..=5); use with --involvement.
    #[arg(long)]
    pub manipulation: Option<u8>,
    #[command(flatten)]
    pub case: CaseArgs,
    #[arg(long, value_enum, default_value = "simulated")]
    pub expected: ExpectedArg,
    #[arg(long, default_value_t = 5.0)]
    pub min_expected: f64,
    /// Merge sparse high-digit categories before testing.
    #[arg(long)]
    pub pool_low_expected: bool,
    #[arg(long, default_value_t = DEFAULT_MAX_DRAWS)]
    pub max_draws: u64,
    /// Simulate epochs on one thread (results are identical).
    #[arg(long)]
    pub serial: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[arg(long, default_value_t = DEFAULT_EPSILON)]
    pub epsilon: f64,
    /// Epoch size, normally the audit sample size.
    #[arg(long)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_DRAWS)]
    pub max_draws: u64,
    /// Include per-epoch digit counts.
    #[arg(long)]
    pub epochs: bool,
    #[arg(long)]
    pub serial: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SchemeArg {
    Benford,
    Uniform,
    Inflate,
}

#[derive(Debug, Clone, Args)]
pub struct CalibrateArgs {
    /// Data-generating schemes, comma separated; one report entry each.
    #[arg(long, value_enum, value_delimiter = ',', default_value = "benford")]
    pub scheme: Vec<SchemeArg>,
    /// Digit inflated by the `inflate` scheme.
    #[arg(long, default_value_t = 1)]
    pub digit: u8,
    /// Boost values for the `inflate` scheme, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0.1")]
    pub boost: Vec<f64>,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, default_value_t = 500)]
    pub n: usize,
    #[arg(long, default_value_t = 1e-8)]
    pub epsilon: f64,
    #[arg(long, default_value_t = 0.05)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_CALIBRATION_BUDGET)]
    pub max_total_draws: u64,
    /// Also report rejection rates against theoretical Benford frequencies.
    #[arg(long)]
    pub compare_theoretical: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub case: CaseArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn execution(serial: bool) -> Execution {
    if serial {
        Execution::Serial
    } else {
        Execution::Parallel
    }
}

fn screen_config(args: &ScreenArgs) -> Result<ScreenConfig> {
    if !args.delimiter.is_ascii() {
        return Err(Error::domain("delimiter must be a single ASCII character"));
    }
    let mut cfg = ScreenConfig::new(&args.input, args.sample_size, args.seed);
    cfg.load = LoadOptions {
        column: args.column.clone(),
        delimiter: args.delimiter as u8,
    };
    cfg.sample_method = match args.sample_method {
        SampleMethodArg::Simple => SamplingMethod::SimpleRandom,
        SampleMethodArg::Systematic => SamplingMethod::Systematic,
    };
    cfg.epsilon = args.epsilon;
    cfg.significance =
        SignificanceConfig::new(args.alpha, args.min_expected, args.pool_low_expected)?;
    cfg.tau = Tau::new(args.tau)?;
    cfg.expected = match args.expected {
        ExpectedArg::Simulated => ExpectedSource::Simulated,
        ExpectedArg::Theoretical => ExpectedSource::Theoretical,
    };
    cfg.execution = execution(args.serial);
    cfg.max_draws = args.max_draws;
    if let Some(path) = &args.factors {
        let text = fs::read_to_string(path)
            .map_err(|e| Error::data(format!("cannot read {}: {e}", path.display())))?;
        cfg.factors = Some(
            FactorAssessment::from_json(&text)
                .map_err(|e| Error::data(format!("{}: {e}", path.display())))?,
        );
    }
    cfg.classification = match (args.involvement, args.manipulation, args.case.any()) {
        (Some(i), Some(j), false) => Some((MICell::new(i, j)?, args.case.potentiality.clone())),
        (None, None, true) => {
            let case = args.case.descriptor()?;
            Some((classify(&case), case.potentiality_note.clone()))
        }
        (None, None, false) => None,
        _ => {
            return Err(Error::domain(
                "give either --involvement with --manipulation, or case descriptor flags",
            ))
        }
    };
    Ok(cfg)
}

fn scheme_list(args: &CalibrateArgs) -> Result<Vec<ManipulationScheme>> {
    let mut out = Vec::new();
    for s in &args.scheme {
        match s {
            SchemeArg::Benford => out.push(ManipulationScheme::BenfordConforming),
            SchemeArg::Uniform => out.push(ManipulationScheme::UniformDigits),
            SchemeArg::Inflate => {
                let digit = Digit::new(args.digit)?;
                for &b in &args.boost {
                    out.push(ManipulationScheme::single_digit_inflation(digit, b)?);
                }
            }
        }
    }
    Ok(out)
}

/// Executes one command and returns the rendered report with its format
/// destination.
pub fn execute(command: &Command) -> Result<(String, Option<PathBuf>)> {
    match command {
        Command::Screen(args) => {
            let report = run_screen(&screen_config(args)?)?;
            Ok((
                render(&report, args.output.format.into())?,
                args.output.output.clone(),
            ))
        }
        Command::Simulate(args) => {
            let cfg = MonteCarloConfig::new(args.epsilon, args.n, args.seed)?
                .with_max_draws(args.max_draws);
            let sim = simulate_with(&cfg, execution(args.serial))?;
            let report = SimulationReport {
                report: "simulate",
                simulation: SimulationSection::from_result(&sim, args.epochs),
                versions: Versions::default(),
            };
            Ok((
                render(&report, args.output.format.into())?,
                args.output.output.clone(),
            ))
        }
        Command::Calibrate(args) => {
            let mut calibrations = Vec::new();
            for scheme in scheme_list(args)? {
                let mut cfg = CalibrationConfig::new(
                    scheme,
                    args.trials,
                    args.n,
                    args.epsilon,
                    args.alpha,
                    args.seed,
                );
                cfg.max_total_draws = args.max_total_draws;
                cfg.compare_theoretical = args.compare_theoretical;
                calibrations.push(CalibrationSection::from(&calibrate(&cfg)?));
            }
            let report = CalibrationDocument {
                report: "calibrate",
                calibrations,
                versions: Versions::default(),
            };
            Ok((
                render(&report, args.output.format.into())?,
                args.output.output.clone(),
            ))
        }
        Command::Classify(args) => {
            let case = args.case.descriptor()?;
            let report = ClassificationReport {
                report: "classify",
                mi_cell: MiCellSection::new(&classify(&case), case.potentiality_note.clone()),
                versions: Versions::default(),
            };
            Ok((
                render(&report, args.output.format.into())?,
                args.output.output.clone(),
            ))
        }
    }
}

/// Parses `args`, runs the command, writes the report and returns the exit
/// status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = execute(&cli.command).and_then(|(text, dest)| match dest {
        Some(path) => fs::write(&path, text)
            .map_err(|e| Error::data(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    });
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("fraudscreen: {e}");
            e.exit_code()
        }
    }
}
