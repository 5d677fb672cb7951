//! The commands behind the `matcomp` binary, as functions from parsed
//! documents to printed output and an exit code.
//!
//! Exit codes: 0 feasible, 1 infeasible, 2 hypothesis violated; 100 parse
//! or I/O error, 101 invalid data, 102 budget exceeded, 103 internal error.
//! The oracle exits with the number of disagreements, capped at 99.

pub mod doc;
pub mod error;

use std::fmt::Write as _;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::Serialize;

use matcomp::completion::{check as run_check, column_completion, Condition, Mode, Ring, Status};
use matcomp::oracle::{run_campaign, CampaignConfig};
use matcomp::structure::{complete_structural_data, StructuralData};

use crate::doc::{MatrixDocument, OracleDocument, StructureDocument, TargetDocument, VerdictDocument};
use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Output {
    #[default]
    Text,
    Json,
}

/// What a command prints and the code it exits with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub code: u8,
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    parse_json(&text).map_err(|e| match e {
        CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

/// Parses a document; errors carry line and column.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map(|s| s + "\n").map_err(|e| CliError::Internal(e.to_string()))
}

pub fn source_data(matrix: &MatrixDocument) -> Result<StructuralData, CliError> {
    Ok(complete_structural_data(&matrix.to_matrix()?)?)
}

pub fn structure(matrix: &MatrixDocument, output: Output) -> Result<Report, CliError> {
    let data = source_data(matrix)?;
    let stdout = match output {
        Output::Json => to_json(&StructureDocument::from_data(&data))?,
        Output::Text => structure_text(&data),
    };
    Ok(Report { stdout, code: 0 })
}

fn structure_text(d: &StructuralData) -> String {
    let factors: Vec<String> = d
        .eta()
        .iter()
        .zip(d.phi())
        .map(|(e, p)| if p.is_one() { e.to_string() } else { format!("({e})/({p})") })
        .collect();
    let mut out = String::new();
    let _ = writeln!(out, "field: {}", d.field());
    let _ = writeln!(out, "shape: {}x{}", d.rows(), d.cols());
    let _ = writeln!(out, "rank: {}", d.rank());
    match d.degree() {
        Some(g) => {
            let _ = writeln!(out, "degree: {g}");
        }
        None => {
            let _ = writeln!(out, "degree: none (rational or zero)");
        }
    }
    let _ = writeln!(out, "invariant factors: [{}]", factors.join(", "));
    let _ = writeln!(out, "orders at infinity: {:?}", d.orders());
    let _ = writeln!(out, "column minimal indices: {:?}", d.col_indices().as_slice());
    let _ = writeln!(out, "row minimal indices: {:?}", d.row_indices().as_slice());
    out
}

#[derive(Clone, Debug, Default)]
pub struct CheckOptions {
    pub ring: Option<Ring>,
    /// Evaluate only the families of this mode.
    pub mode: Option<Mode>,
    pub explain: bool,
    pub column: bool,
    pub output: Output,
}

pub fn check(matrix: &MatrixDocument, target: &TargetDocument, opts: &CheckOptions) -> Result<Report, CliError> {
    let source = source_data(matrix)?;
    let mut prescribed = target.to_prescribed(source.field())?;
    if let Some(mode) = opts.mode {
        prescribed = prescribed.project(mode)?;
    }
    let ring = opts.ring.unwrap_or(Ring::Polynomial);
    let verdict = if opts.column {
        column_completion(&source, &prescribed, ring)?
    } else {
        run_check(&source, &prescribed, ring)?
    };
    let code = match verdict.status {
        Status::Feasible => 0,
        Status::Infeasible => 1,
        Status::HypothesisViolated => 2,
    };
    let doc = VerdictDocument::new(prescribed.mode, ring, opts.column, verdict);
    let stdout = match opts.output {
        Output::Json => to_json(&doc)?,
        Output::Text => verdict_text(&doc, opts.explain),
    };
    Ok(Report { stdout, code })
}

fn condition_line(c: &Condition) -> String {
    let mark = if c.holds { "ok  " } else { "FAIL" };
    if c.rhs.is_empty() {
        format!("  {mark} {}: {} ({})\n", c.id, c.description, c.lhs)
    } else {
        format!("  {mark} {}: {} (lhs {}, rhs {})\n", c.id, c.description, c.lhs, c.rhs)
    }
}

fn verdict_text(doc: &VerdictDocument, explain: bool) -> String {
    let status = match doc.verdict.status {
        Status::Feasible => "feasible",
        Status::Infeasible => "infeasible",
        Status::HypothesisViolated => "hypothesis violated",
    };
    let ring = match doc.ring {
        Ring::Polynomial => "polynomial",
        Ring::Rational => "rational",
    };
    let side = if doc.column { "column" } else { "row" };
    let mut out = format!("{status}: {} {side} completion, {ring} W\n", doc.mode);
    for c in doc.verdict.conditions.iter().filter(|c| explain || !c.holds) {
        out.push_str(&condition_line(c));
    }
    if explain {
        let _ = writeln!(out, "  a = {:?}", doc.verdict.a);
        let _ = writeln!(out, "  b = {:?}", doc.verdict.b);
    }
    out
}

pub fn oracle(cfg: &CampaignConfig, output: Output) -> Result<Report, CliError> {
    let report = run_campaign(cfg)?;
    let failures = report.disagreement_count() + report.sequence_violations();
    let stdout = match output {
        Output::Json => to_json(&OracleDocument::new(report))?,
        Output::Text => report.to_text(),
    };
    Ok(Report { stdout, code: failures.min(99) as u8 })
}
