use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qpa_core::fidelity::Objective;
use qpa_core::{QpaError, Spectrum, YoungDiagram};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "qpa", version, about = "Exact and asymptotic fidelities of optimal quantum purity amplification")]
struct Cli {
    /// Worker threads for sector and grid evaluation.
    #[arg(long, global = true, env = "QPA_WORKERS")]
    workers: Option<usize>,

    /// Write the result to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fidelity of one Schur–Weyl sector for a chosen environment.
    Sector(SectorArgs),
    /// Overall fidelity averaged over all sectors.
    Overall(OverallArgs),
    /// Asymptotic laws, nonasymptotic bounds and optimality thresholds.
    Asymptote(AsymptoteArgs),
    /// Fidelity and phase index on a (λ, R) grid.
    PhaseDiagram(PhaseArgs),
    /// Run a seeded verification suite.
    Verify(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ObjectiveArg {
    All,
    One,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::All => Objective::All,
            ObjectiveArg::One => Objective::One,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RuleArg {
    /// Overhang removal, with the best valid environment where it is infeasible.
    Overhang,
    /// Best environment in every sector.
    Optimal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyArg {
    Depolarized,
    DepolarizedLimit,
    Linear,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct SectorArgs {
    /// Sector shape, e.g. 2,1,0.
    #[arg(long, value_parser = parse_shape)]
    shape: YoungDiagram,
    /// Target index, 1-based in the sorted spectrum.
    #[arg(long)]
    k: usize,
    /// Output copies; implied by --environment when omitted.
    #[arg(long)]
    m: Option<i64>,
    /// Sorted spectrum, e.g. 3/4,1/4 or 0.75,0.25.
    #[arg(long, value_parser = parse_spectrum)]
    spectrum: Spectrum,
    /// Environment shape; defaults to the overhang removal.
    #[arg(long, value_parser = parse_shape, allow_hyphen_values = true)]
    environment: Option<YoungDiagram>,
    #[arg(long, value_enum, default_value = "all")]
    objective: ObjectiveArg,
    /// Evaluate in double precision.
    #[arg(long)]
    float: bool,
}

#[derive(Args, Debug)]
struct OverallArgs {
    #[arg(long)]
    n: i64,
    /// Local dimension; must match the spectrum length when given.
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    m: i64,
    #[arg(long, value_parser = parse_spectrum)]
    spectrum: Spectrum,
    #[arg(long, value_enum, default_value = "overhang")]
    rule: RuleArg,
    #[arg(long, value_enum, default_value = "all")]
    objective: ObjectiveArg,
    #[arg(long)]
    float: bool,
}

#[derive(Args, Debug)]
struct AsymptoteArgs {
    #[arg(long, value_parser = parse_spectrum)]
    spectrum: Spectrum,
    #[arg(long)]
    k: usize,
    /// Output copies, for the intensive law, bounds and thresholds.
    #[arg(long)]
    m: Option<i64>,
    /// Input copies, for the intensive law and bounds.
    #[arg(long)]
    n: Option<i64>,
    /// Rate R = m/n, for the extensive and one-site laws.
    #[arg(long = "rate", visible_alias = "R")]
    rate: Option<f64>,
    #[arg(long, value_enum, default_value = "all")]
    objective: ObjectiveArg,
}

#[derive(Args, Debug)]
struct PhaseArgs {
    #[arg(long, value_enum, default_value = "depolarized")]
    family: FamilyArg,
    /// Dimension of the depolarized family.
    #[arg(long, default_value_t = 3)]
    d: usize,
    /// Spectrum at λ = 0 for the linear family.
    #[arg(long, value_parser = parse_spectrum)]
    from: Option<Spectrum>,
    /// Spectrum at λ = 1 for the linear family.
    #[arg(long, value_parser = parse_spectrum)]
    to: Option<Spectrum>,
    #[arg(long, default_value_t = 1)]
    k: usize,
    #[arg(long, default_value_t = 0.0)]
    lambda_min: f64,
    #[arg(long, default_value_t = 0.95)]
    lambda_max: f64,
    #[arg(long, default_value_t = 20)]
    lambda_points: usize,
    #[arg(long, default_value_t = 0.0)]
    rate_min: f64,
    #[arg(long, default_value_t = 1.0)]
    rate_max: f64,
    #[arg(long, default_value_t = 21)]
    rate_points: usize,
    #[arg(long, value_enum, default_value = "all")]
    objective: ObjectiveArg,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Suite name, or "all".
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = qpa_core::verify::DEFAULT_SEED)]
    seed: u64,
    /// Randomized cases (or samples); suite default when omitted.
    #[arg(long)]
    cases: Option<usize>,
    /// Largest n to enumerate; suite default when omitted.
    #[arg(long)]
    max_n: Option<i64>,
}

fn parse_spectrum(s: &str) -> Result<Spectrum, String> {
    s.parse().map_err(|e: QpaError| e.to_string())
}

fn parse_shape(s: &str) -> Result<YoungDiagram, String> {
    s.parse().map_err(|e: QpaError| e.to_string())
}

/// Failure classes, mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    /// Bad input or violated precondition: exit 2.
    Usage(String),
    /// A verification suite found a violation: exit 1.
    Failed(String),
}

impl From<QpaError> for CliError {
    fn from(e: QpaError) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if w == 0 {
            eprintln!("error: --workers must be positive");
            return ExitCode::from(2);
        }
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    let result = match &cli.command {
        Command::Sector(a) => commands::sector(a),
        Command::Overall(a) => commands::overall(a),
        Command::Asymptote(a) => commands::asymptote(a),
        Command::PhaseDiagram(a) => commands::phase_diagram(a),
        Command::Verify(a) => commands::verify(a),
    };
    let (text, code) = match result {
        Ok(text) => (text, 0),
        Err(CliError::Failed(text)) => (text, 1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &text),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}
