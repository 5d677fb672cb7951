use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use matcomp::completion::{Mode, Ring};
use matcomp::field::Field;
use matcomp::oracle::{CampaignConfig, DEFAULT_BUDGET};
use matcomp_cli::doc::{MatrixDocument, TargetDocument};
use matcomp_cli::error::CliError;
use matcomp_cli::{read_json, CheckOptions, Output, Report};

const EXIT_CODES: &str = "\
Exit codes:
  0    feasible (oracle: no disagreements)
  1    infeasible
  2    prescription outside the hypotheses of the characterization
  100  parse or I/O error
  101  invalid data
  102  search budget exceeded
  103  internal inconsistency
  The oracle exits with its disagreement count, capped at 99.";

#[derive(Parser)]
#[command(
    name = "matcomp",
    version,
    about = "Structural data of polynomial and rational matrices, and feasibility of row and column completions",
    after_help = EXIT_CODES
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print invariant rational functions, orders at infinity and minimal indices of a matrix.
    Structure {
        /// Matrix document (JSON).
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        output: OutputArg,
    },
    /// Decide whether the source can be completed to match the target document.
    Check(CheckArgs),
    /// Prescribed invariant rational functions, orders at infinity and both families of minimal indices.
    Complete(ModeArgs),
    /// Prescribed invariant rational functions, orders at infinity and column minimal indices.
    #[command(name = "fin-inf-col")]
    FinInfCol(ModeArgs),
    /// Prescribed invariant rational functions, orders at infinity and row minimal indices.
    #[command(name = "fin-inf-row")]
    FinInfRow(ModeArgs),
    /// Prescribed invariant rational functions and orders at infinity.
    #[command(name = "fin-inf")]
    FinInf(ModeArgs),
    /// Prescribed orders at infinity only. Polynomial and rational completions differ here.
    Inf(ModeArgs),
    /// Prescribed invariant rational functions only.
    Fin(ModeArgs),
    /// Prescribed invariant rational functions and the first order at infinity (at most that of the source).
    #[command(name = "fin-first-order")]
    FinFirstOrder(ModeArgs),
    /// Compare every predicate with exhaustive search over a small finite field.
    Oracle(OracleArgs),
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum OutputArg {
    #[default]
    Text,
    Json,
}

impl From<OutputArg> for Output {
    fn from(o: OutputArg) -> Self {
        match o {
            OutputArg::Text => Output::Text,
            OutputArg::Json => Output::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    /// Polynomial completing rows.
    Poly,
    /// Rational completing rows.
    Rational,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Self {
        match r {
            RingArg::Poly => Ring::Polynomial,
            RingArg::Rational => Ring::Rational,
        }
    }
}

#[derive(Args)]
struct ModeArgs {
    /// Matrix document of the source (JSON).
    matrix: PathBuf,
    /// Target document (JSON).
    target: PathBuf,
    /// Ring of the added rows.
    #[arg(long, value_enum, default_value = "poly")]
    ring: RingArg,
    /// Print every condition with both sides, and the auxiliary sequences.
    #[arg(long)]
    explain: bool,
    /// Add columns instead of rows.
    #[arg(long)]
    column: bool,
    #[arg(long, value_enum, default_value_t)]
    output: OutputArg,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    common: ModeArgs,
    /// Evaluate only the families of this mode: complete, fin-inf-col, fin-inf-row, fin-inf, inf, fin,
    /// fin-first-order. Defaults to the mode of the target document.
    #[arg(long, value_parser = parse_mode)]
    mode: Option<Mode>,
}

#[derive(Args)]
struct OracleArgs {
    /// Characteristic p of the field GF(p).
    #[arg(long, default_value_t = 2)]
    field: u32,
    /// Degree bound of the source entries.
    #[arg(long, default_value_t = 1)]
    max_degree: usize,
    /// Rows of the source.
    #[arg(long, default_value_t = 1)]
    rows: usize,
    /// Columns of the source.
    #[arg(long, default_value_t = 2)]
    cols: usize,
    /// Number of added rows.
    #[arg(long, default_value_t = 1)]
    added_rows: usize,
    /// Degree bound of the added rows; defaults to max-degree + 1.
    #[arg(long)]
    search_degree: Option<usize>,
    /// Predicates to test; repeat for several. Defaults to complete.
    #[arg(long, value_parser = parse_mode)]
    mode: Vec<Mode>,
    /// Rings to test; both when omitted.
    #[arg(long, value_enum)]
    ring: Vec<RingArg>,
    /// Skip the comparison of partial predicates with the projected complete one.
    #[arg(long)]
    no_projection: bool,
    /// Largest search space (candidates per source) that may be enumerated.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Test only this many sources, drawn with --seed.
    #[arg(long)]
    samples: Option<usize>,
    /// Seed for drawing sources.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t)]
    output: OutputArg,
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse()
}

fn check(args: &ModeArgs, mode: Option<Mode>) -> Result<Report, CliError> {
    let matrix: MatrixDocument = read_json(&args.matrix)?;
    let target: TargetDocument = read_json(&args.target)?;
    let opts = CheckOptions {
        ring: Some(args.ring.into()),
        mode,
        explain: args.explain,
        column: args.column,
        output: args.output.into(),
    };
    matcomp_cli::check(&matrix, &target, &opts)
}

fn oracle(args: &OracleArgs) -> Result<Report, CliError> {
    let field = Field::prime(args.field).map_err(|e| CliError::Invalid(e.to_string()))?;
    let mut cfg = CampaignConfig::new(field, args.rows, args.cols, args.max_degree);
    cfg.z = args.added_rows;
    if let Some(g) = args.search_degree {
        cfg.search_degree = g;
    }
    if !args.mode.is_empty() {
        cfg.modes = args.mode.clone();
    }
    cfg.rings = if args.ring.is_empty() {
        vec![Ring::Polynomial, Ring::Rational]
    } else {
        args.ring.iter().map(|&r| r.into()).collect()
    };
    cfg.projection = !args.no_projection && cfg.modes.iter().any(|&m| m != Mode::Complete);
    cfg.budget = args.budget;
    cfg.sample = args.samples.map(|n| (n, args.seed));
    matcomp_cli::oracle(&cfg, args.output.into())
}

fn run(cli: Cli) -> Result<Report, CliError> {
    match cli.command {
        Command::Structure { matrix, output } => matcomp_cli::structure(&read_json(&matrix)?, output.into()),
        Command::Check(args) => check(&args.common, args.mode),
        Command::Complete(a) => check(&a, Some(Mode::Complete)),
        Command::FinInfCol(a) => check(&a, Some(Mode::FinInfCol)),
        Command::FinInfRow(a) => check(&a, Some(Mode::FinInfRow)),
        Command::FinInf(a) => check(&a, Some(Mode::FinInf)),
        Command::Inf(a) => check(&a, Some(Mode::InfOnly)),
        Command::Fin(a) => check(&a, Some(Mode::FinOnly)),
        Command::FinFirstOrder(a) => check(&a, Some(Mode::FinFirstOrder)),
        Command::Oracle(args) => oracle(&args),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 100 } else { 0 });
        }
    };
    match run(cli) {
        Ok(report) => {
            print!("{}", report.stdout);
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
