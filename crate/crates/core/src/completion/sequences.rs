//! The auxiliary sequences `a` and `b` appearing in the majorization
//! conditions, each defined through its prefix sums.

use serde::{Deserialize, Serialize};

use super::{delta, Mode, PrescribedData, Problem, Ring};
use crate::error::CompletionError;
use crate::poly::poly_lcm;
use crate::structure::StructuralData;

/// Which definition of the sequences to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// Polynomial data, written with `deg lcm` and `max` of orders.
    Polynomial,
    /// Polynomial data with orders measured from the first one.
    DegreeFixed,
    /// Rational data, balanced against the row indices.
    RowSide,
    /// Rational data, balanced against the column indices.
    ColumnSide,
    /// The sequence used when neither index family is prescribed.
    FinInfOnly,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeqBuilderOutput {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
}

/// Builds the sequences of `variant` for a prescription. The prescription
/// must carry the families the variant reads.
pub fn build_sequences(
    source: &StructuralData,
    target: &PrescribedData,
    variant: Variant,
) -> Result<SeqBuilderOutput, CompletionError> {
    let ring = match variant {
        Variant::Polynomial | Variant::DegreeFixed => Ring::Polynomial,
        _ => Ring::Rational,
    };
    let pb = match Problem::new(source, target, ring)? {
        Ok(pb) => pb,
        Err(_) => return Err(CompletionError::Malformed(format!("x = {} exceeds min(z, n - r)", target.x))),
    };
    let needs = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(CompletionError::Malformed(format!("{variant:?} sequences need {what}")))
        }
    };
    needs(target.finite.is_some() && target.orders.is_some(), "finite structure and orders")?;
    match variant {
        Variant::Polynomial | Variant::DegreeFixed | Variant::RowSide => {
            needs(target.row_indices.is_some(), "row indices")?;
        }
        Variant::ColumnSide => needs(target.col_indices.is_some(), "column indices")?,
        Variant::FinInfOnly => {}
    }
    Ok(match variant {
        Variant::Polynomial => polynomial(&pb),
        Variant::DegreeFixed => degree_fixed(&pb),
        Variant::RowSide => row_side(&pb),
        Variant::ColumnSide => column_side(&pb),
        Variant::FinInfOnly => SeqBuilderOutput { a: fin_inf_only(&pb), b: Vec::new() },
    })
}

/// Successive differences of prefix sums `S_1, S_2, ...`.
fn from_prefix(prefix: impl IntoIterator<Item = i64>) -> Vec<i64> {
    let mut prev = 0;
    prefix
        .into_iter()
        .map(|s| {
            let a = s - prev;
            prev = s;
            a
        })
        .collect()
}

fn rank_target(pb: &Problem<'_>) -> usize {
    pb.r + pb.x
}

/// `deg lcm(alpha_i, beta_k) + max{p_i, q_k}`.
fn poly_pair(pb: &Problem<'_>, i: usize, k: usize) -> i64 {
    let beta = &pb.finite().eps[k - 1];
    poly_lcm(&pb.src.eta()[i - 1], beta).deg() + pb.p(i).max(pb.q(k))
}

fn poly_target(pb: &Problem<'_>, k: usize) -> i64 {
    pb.finite().eps[k - 1].deg() + pb.q(k)
}

pub(crate) fn polynomial(pb: &Problem<'_>) -> SeqBuilderOutput {
    let (r, x) = (pb.r, pb.x);
    let base = pb.v().sum() - pb.u().sum();
    let a = from_prefix((1..=x).map(|j| {
        let shift = x - j;
        base + (1..=r + j).map(|i| poly_target(pb, i + shift)).sum::<i64>()
            - (1..=r).map(|i| poly_pair(pb, i, i + shift)).sum::<i64>()
    }));
    let b = from_prefix((1..=pb.z - x).map(|j| {
        base + (1..=r.saturating_sub(j)).map(|i| poly_target(pb, i + x + j) - poly_pair(pb, i, i + x + j)).sum::<i64>()
    }));
    SeqBuilderOutput { a, b }
}

pub(crate) fn degree_fixed(pb: &Problem<'_>) -> SeqBuilderOutput {
    let (r, x) = (pb.r, pb.x);
    let p1 = pb.src.orders().first().copied().unwrap_or(0);
    let q1 = if rank_target(pb) > 0 { pb.q(1) } else { 0 };
    let e = |i: usize| pb.p(i) - p1;
    let f = |k: usize| pb.q(k) - q1;
    let pair =
        |i: usize, k: usize| poly_lcm(&pb.src.eta()[i - 1], &pb.finite().eps[k - 1]).deg() + (e(i) + p1 - q1).max(f(k));
    let tgt = |k: usize| pb.finite().eps[k - 1].deg() + f(k);
    let base = pb.v().sum() - pb.u().sum();
    let a = from_prefix((1..=x).map(|j| {
        let shift = x - j;
        base + (1..=r + j).map(|i| tgt(i + shift)).sum::<i64>() - (1..=r).map(|i| pair(i, i + shift)).sum::<i64>()
            + j as i64 * q1
    }));
    let b = from_prefix(
        (1..=pb.z - x)
            .map(|j| base + (1..=r.saturating_sub(j)).map(|i| tgt(i + x + j) - pair(i, i + x + j)).sum::<i64>()),
    );
    SeqBuilderOutput { a, b }
}

/// `Δ(eta_i/phi_i, eps_k/psi_k, p_i, q_k)`.
pub(crate) fn pair_delta(pb: &Problem<'_>, i: usize, k: usize) -> i64 {
    delta(&pb.f(i), Some(&pb.g(k)), Some(pb.p(i)), Some(pb.q(k)))
}

/// `Δ(eps_k/psi_k, q_k)`.
pub(crate) fn target_delta(pb: &Problem<'_>, k: usize) -> i64 {
    delta(&pb.g(k), None, Some(pb.q(k)), None)
}

/// `Δ(eta_i/phi_i, p_i)`.
pub(crate) fn source_delta(pb: &Problem<'_>, i: usize) -> i64 {
    delta(&pb.f(i), None, Some(pb.p(i)), None)
}

pub(crate) fn row_side(pb: &Problem<'_>) -> SeqBuilderOutput {
    let (r, x) = (pb.r, pb.x);
    let base = pb.v().sum() - pb.u().sum();
    let a = from_prefix((1..=x).map(|j| {
        let shift = x - j;
        base + (1..=r + j).map(|i| target_delta(pb, i + shift)).sum::<i64>()
            - (1..=r).map(|i| pair_delta(pb, i, i + shift)).sum::<i64>()
    }));
    let b = from_prefix((1..=pb.z - x).map(|j| {
        base + (1..=r.saturating_sub(j))
            .map(|i| target_delta(pb, i + x + j) - pair_delta(pb, i, i + x + j))
            .sum::<i64>()
    }));
    SeqBuilderOutput { a, b }
}

pub(crate) fn column_side(pb: &Problem<'_>) -> SeqBuilderOutput {
    let (r, x) = (pb.r, pb.x);
    let base = pb.c().sum() - pb.d().sum() + (1..=r).map(|i| source_delta(pb, i)).sum::<i64>();
    let a = from_prefix((1..=x).map(|j| {
        base - (1..=x - j).map(|i| target_delta(pb, i)).sum::<i64>()
            - (1..=r).map(|i| pair_delta(pb, i, i + x - j)).sum::<i64>()
    }));
    let b = from_prefix((1..=pb.z - x).map(|j| {
        base - (1..=(x + j).min(r + x)).map(|i| target_delta(pb, i)).sum::<i64>()
            - (1..=r.saturating_sub(j)).map(|i| pair_delta(pb, i, i + x + j)).sum::<i64>()
    }));
    SeqBuilderOutput { a, b }
}

pub(crate) fn fin_inf_only(pb: &Problem<'_>) -> Vec<i64> {
    let (r, x) = (pb.r, pb.x);
    from_prefix((1..=x).map(|j| {
        let shift = x - j;
        (1..=r + j).map(|i| target_delta(pb, i + shift)).sum::<i64>()
            - (1..=r).map(|i| pair_delta(pb, i, i + shift)).sum::<i64>()
    }))
}

impl Mode {
    /// The sequence variant whose `a` this mode's predicate reports.
    pub fn reported_variant(self, ring: Ring) -> Option<Variant> {
        match self {
            Mode::Complete if ring == Ring::Polynomial => Some(Variant::Polynomial),
            Mode::Complete | Mode::FinInfRow => Some(Variant::RowSide),
            Mode::FinInfCol => Some(Variant::ColumnSide),
            Mode::FinInf => Some(Variant::FinInfOnly),
            _ => None,
        }
    }
}
