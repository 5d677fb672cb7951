//! Differential testing of the predicates against exhaustive search.

use std::collections::BTreeSet;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::targets::{divisor_chains, near_misses, order_sequences, partitions, rational_chains, split_partitions};
use super::{all_matrices, enumerate_completions, AchievableSet, SearchSpace};
use crate::completion::{check, FiniteChains, Mode, PrescribedData, Ring, Status, Verdict};
use crate::error::OracleError;
use crate::field::Field;
use crate::matrix::PolyMatrix;
use crate::poly::Poly;
use crate::structure::{polynomial_structural_data, StructuralData};

/// What a predicate verdict was compared with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// Membership of the (projected) target in the achievable set.
    Search,
    /// Existence of a complete prescription extending the target that the
    /// complete predicate accepts.
    Projection,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    pub source: String,
    pub mode: Mode,
    pub ring: Ring,
    pub kind: CheckKind,
    pub target: String,
    pub predicate: Status,
    pub expected: bool,
}

impl fmt::Display for Disagreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "DISAGREE source={} mode={} ring={:?} against={:?} target={} predicate={:?} expected={}",
            self.source, self.mode, self.ring, self.kind, self.target, self.predicate, self.expected
        )
    }
}

/// Outcome of the differential test on one source.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceReport {
    pub source: String,
    pub achievable: usize,
    pub targets: usize,
    pub checks: usize,
    pub feasible: usize,
    pub hypothesis_violated: usize,
    pub disagreements: Vec<Disagreement>,
    /// Feasible verdicts whose `a` or `b` sequence is not non-increasing, or
    /// whose `b` ends below zero.
    pub sequence_violations: Vec<String>,
}

/// Settings of a campaign over every source of one shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub source_degree: usize,
    pub search_degree: usize,
    pub z: usize,
    pub modes: Vec<Mode>,
    pub rings: Vec<Ring>,
    pub budget: u64,
    /// Also compare every partial predicate with the projection of the
    /// complete one.
    pub projection: bool,
    /// Lower bound for free orders in projections, as `-projection_degree`.
    pub projection_degree: i64,
    /// Bound on the total degree of free denominators in projections.
    pub projection_den_degree: i64,
    /// Draw this many sources with the seed instead of taking all of them.
    pub sample: Option<(usize, u64)>,
}

impl CampaignConfig {
    pub fn new(field: Field, rows: usize, cols: usize, source_degree: usize) -> Self {
        CampaignConfig {
            field,
            rows,
            cols,
            source_degree,
            search_degree: source_degree + 1,
            z: 1,
            modes: vec![Mode::Complete],
            rings: vec![Ring::Polynomial],
            budget: super::DEFAULT_BUDGET,
            projection: false,
            projection_degree: source_degree as i64 + 2,
            projection_den_degree: 2,
            sample: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub sources: Vec<SourceReport>,
}

impl CampaignReport {
    pub fn disagreements(&self) -> impl Iterator<Item = &Disagreement> {
        self.sources.iter().flat_map(|s| &s.disagreements)
    }

    pub fn disagreement_count(&self) -> usize {
        self.sources.iter().map(|s| s.disagreements.len()).sum()
    }

    pub fn sequence_violations(&self) -> usize {
        self.sources.iter().map(|s| s.sequence_violations.len()).sum()
    }

    pub fn total(&self, f: impl Fn(&SourceReport) -> usize) -> usize {
        self.sources.iter().map(f).sum()
    }

    /// Line-oriented summary: one line per disagreement, then totals.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for d in self.disagreements() {
            out.push_str(&d.to_string());
            out.push('\n');
        }
        for s in self.sources.iter().flat_map(|s| &s.sequence_violations) {
            out.push_str("SEQUENCE ");
            out.push_str(s);
            out.push('\n');
        }
        out.push_str(&format!(
            "field={} shape={}x{} deg<={} z={} search-deg<={} sources={} targets={} checks={} feasible={} hypothesis-violated={} disagreements={}\n",
            self.config.field,
            self.config.rows,
            self.config.cols,
            self.config.source_degree,
            self.config.z,
            self.config.search_degree,
            self.sources.len(),
            self.total(|s| s.targets),
            self.total(|s| s.checks),
            self.total(|s| s.feasible),
            self.total(|s| s.hypothesis_violated),
            self.disagreement_count(),
        ));
        out
    }
}

/// Runs the differential test on every source of the configured shape.
pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport, OracleError> {
    let mut sources = all_matrices(cfg.field, cfg.rows, cfg.cols, cfg.source_degree, cfg.budget)?;
    if let Some((count, seed)) = cfg.sample {
        if count < sources.len() {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            sources.shuffle(&mut rng);
            sources.truncate(count);
        }
    }
    let reports = sources
        .par_iter()
        .map(|p| {
            let space = SearchSpace::new(p.clone(), cfg.z, cfg.search_degree)?;
            let set = enumerate_completions(&space, cfg.budget)?;
            differential_test(&space, &set, cfg)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CampaignReport { config: cfg.clone(), sources: reports })
}

fn sequences_ok(v: &Verdict) -> bool {
    let down = |s: &[i64]| s.windows(2).all(|w| w[0] >= w[1]);
    down(&v.a) && down(&v.b) && v.b.last().is_none_or(|&b| b >= 0)
}

fn show_target(t: &PrescribedData) -> String {
    let polys = |v: &[Poly]| v.iter().map(|p| format!("{p}")).collect::<Vec<_>>().join(",");
    let mut parts = vec![format!("x={}", t.x)];
    if let Some(f) = &t.finite {
        if f.is_polynomial() {
            parts.push(format!("fin=[{}]", polys(&f.eps)));
        } else {
            parts.push(format!("fin=[{}]/[{}]", polys(&f.eps), polys(&f.psi)));
        }
    }
    if let Some(q) = &t.orders {
        parts.push(format!("q={q:?}"));
    }
    if let Some(q1) = t.first_order {
        parts.push(format!("q1={q1}"));
    }
    if let Some(d) = &t.col_indices {
        parts.push(format!("d={d:?}"));
    }
    if let Some(v) = &t.row_indices {
        parts.push(format!("v={v:?}"));
    }
    parts.join(" ")
}

/// Whether search over the space decides `target` exactly: every matrix
/// with its first order has degree at most the bound, and rational
/// completions cannot realize it unless polynomial ones do.
fn search_decides(target: &PrescribedData, ring: Ring, degree: usize) -> bool {
    let degree_ok = match target.first_order_value() {
        Some(q1) => -q1 <= degree as i64,
        None => target.x == 0 && target.finite.as_ref().is_some_and(|f| f.is_empty()),
    };
    let denominators_fixed = target.finite.as_ref().is_some_and(FiniteChains::is_polynomial);
    let ring_ok = ring == Ring::Polynomial || denominators_fixed;
    degree_ok && ring_ok && target.mode != Mode::FinOnly
}

/// Compares every predicate in `cfg` with the achievable set, and with the
/// projection of the complete predicate when enabled.
pub fn differential_test(
    space: &SearchSpace,
    set: &AchievableSet,
    cfg: &CampaignConfig,
) -> Result<SourceReport, OracleError> {
    let source = polynomial_structural_data(space.source())?;
    let (r, n, z, g) = (source.rank(), source.cols(), space.z(), space.degree());
    let mut corpus: BTreeSet<StructuralData> = BTreeSet::new();
    for member in set.members() {
        corpus.insert(member.clone());
        corpus.extend(near_misses(member));
    }
    corpus.retain(|t| {
        t.rank() >= r && t.rank() - r <= z.min(n - r) && t.orders().first().is_none_or(|&q1| -q1 <= g as i64)
    });
    let mut report = SourceReport {
        source: show_matrix(space.source()),
        achievable: set.len(),
        targets: corpus.len(),
        ..SourceReport::default()
    };
    for &mode in &cfg.modes {
        let targets: BTreeSet<PrescribedData> =
            corpus.iter().map(|t| PrescribedData::from_data(t, r, z, mode)).collect();
        let reachable: BTreeSet<PrescribedData> =
            set.members().map(|t| PrescribedData::from_data(t, r, z, mode)).collect();
        for &ring in &cfg.rings {
            let outcomes = targets
                .par_iter()
                .map(|t| {
                    let verdict = check(&source, t, ring)?;
                    let mut found = Vec::new();
                    if verdict.status != Status::HypothesisViolated {
                        if set.is_exhaustive() && search_decides(t, ring, g) {
                            found.push((CheckKind::Search, reachable.contains(t)));
                        }
                        if cfg.projection && mode != Mode::Complete {
                            let ext =
                                exists_extension(&source, t, ring, cfg.projection_degree, cfg.projection_den_degree)?;
                            found.push((CheckKind::Projection, ext.is_some()));
                        }
                    }
                    Ok::<_, OracleError>((t, verdict, found))
                })
                .collect::<Result<Vec<_>, _>>()?;
            for (t, verdict, found) in outcomes {
                match verdict.status {
                    Status::HypothesisViolated => report.hypothesis_violated += 1,
                    Status::Feasible => {
                        report.feasible += 1;
                        if !sequences_ok(&verdict) {
                            report.sequence_violations.push(format!(
                                "source={} mode={mode} ring={ring:?} target={} a={:?} b={:?}",
                                report.source,
                                show_target(t),
                                verdict.a,
                                verdict.b
                            ));
                        }
                    }
                    Status::Infeasible => {}
                }
                for (kind, expected) in found {
                    report.checks += 1;
                    if expected != verdict.feasible() {
                        report.disagreements.push(Disagreement {
                            source: report.source.clone(),
                            mode,
                            ring,
                            kind,
                            target: show_target(t),
                            predicate: verdict.status,
                            expected,
                        });
                    }
                }
            }
        }
    }
    Ok(report)
}

fn show_matrix(p: &PolyMatrix) -> String {
    let rows: Vec<String> =
        (0..p.rows()).map(|i| p.row(i).iter().map(|e| e.to_string()).collect::<Vec<_>>().join(", ")).collect();
    format!("[{}]", rows.join("; "))
}

/// Searches for a complete prescription extending `partial` that the
/// complete predicate accepts. Free orders are bounded below by
/// `-lowest_degree` and free denominators by total degree `max_den`; the
/// remaining bounds follow from the sum identity.
pub fn exists_extension(
    source: &StructuralData,
    partial: &PrescribedData,
    ring: Ring,
    lowest_degree: i64,
    max_den: i64,
) -> Result<Option<PrescribedData>, OracleError> {
    let field = source.field();
    let (m, n, r) = (source.rows(), source.cols(), source.rank());
    let (x, z) = (partial.x, partial.z);
    let len = r + x;
    let (len_d, len_v) = (n - r - x, m + z - r - x);
    let finite_opts: Vec<FiniteChains> = match &partial.finite {
        Some(f) => vec![f.clone()],
        None => {
            let q_sum: i64 = partial.orders.as_ref().map_or(0, |q| q.iter().sum());
            match ring {
                Ring::Polynomial => {
                    divisor_chains(field, len, -q_sum).into_iter().map(|b| FiniteChains::polynomial(field, b)).collect()
                }
                Ring::Rational => rational_chains(field, len, max_den - q_sum, max_den),
            }
        }
    };
    for finite in finite_opts {
        let net: i64 = finite.eps.iter().map(Poly::deg).sum::<i64>() - finite.psi.iter().map(Poly::deg).sum::<i64>();
        let order_opts: Vec<Vec<i64>> = match &partial.orders {
            Some(q) => vec![q.clone()],
            None if len == 0 => vec![Vec::new()],
            // A matrix with this finite structure need not have small degree.
            None => order_sequences(len, -(lowest_degree + net.max(0)), partial.first_order, -net),
        };
        for orders in order_opts {
            let rest = -(orders.iter().sum::<i64>() + net);
            let index_opts: Vec<(Vec<i64>, Vec<i64>)> = match (&partial.col_indices, &partial.row_indices) {
                (Some(d), Some(v)) => vec![(d.clone(), v.clone())],
                (Some(d), None) => {
                    partitions(len_v, rest - d.iter().sum::<i64>()).into_iter().map(|v| (d.clone(), v)).collect()
                }
                (None, Some(v)) => {
                    partitions(len_d, rest - v.iter().sum::<i64>()).into_iter().map(|d| (d, v.clone())).collect()
                }
                (None, None) => split_partitions(len_d, len_v, rest),
            };
            for (d, v) in index_opts {
                let full = PrescribedData {
                    mode: Mode::Complete,
                    z,
                    x,
                    finite: Some(finite.clone()),
                    orders: Some(orders.clone()),
                    first_order: None,
                    col_indices: Some(d),
                    row_indices: Some(v),
                };
                if check(source, &full, ring)?.feasible() {
                    return Ok(Some(full));
                }
            }
        }
    }
    Ok(None)
}
