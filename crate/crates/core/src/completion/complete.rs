//! Row completion with all four families prescribed.

use super::sequences::{self, pair_delta, target_delta};
use super::{
    den_interlacing, num_interlacing, order_interlacing, Condition, FiniteChains, Mode, PrescribedData, Problem, Ring,
    Verdict,
};
use crate::error::CompletionError;
use crate::majorization::{gen_majorize_report, IntSeq};
use crate::poly::{poly_lcm, Poly};
use crate::structure::{scale_data, StructuralData};

pub(crate) fn gen_maj_condition(
    id: &str,
    description: &str,
    c: &IntSeq,
    d: &IntSeq,
    a: &[i64],
) -> Result<Condition, CompletionError> {
    let rep = gen_majorize_report(c, d, a)?;
    let mut failed = Vec::new();
    if !rep.dominance {
        failed.push("dominance".to_string());
    }
    for (j, ok) in rep.prefix.iter().enumerate() {
        if !ok {
            failed.push(format!("prefix j={} (h={})", j + 1, rep.h[j]));
        }
    }
    if !rep.total {
        failed.push("total".to_string());
    }
    let description = if failed.is_empty() {
        description.to_string()
    } else {
        format!("{description}; fails at {}", failed.join(", "))
    };
    Ok(Condition::new(
        id,
        description,
        rep.holds(),
        format!("{:?}", c.as_slice()),
        format!("({:?}, {a:?})", d.as_slice()),
    ))
}

pub(crate) fn eta_bar(pb: &Problem<'_>) -> Condition {
    let (lhs, rhs) = (pb.v().positive_count(), pb.u().positive_count());
    Condition::new("eta-bar", "#{v_i > 0} >= #{u_i > 0}", lhs >= rhs, lhs, rhs)
}

fn require_mode(target: &PrescribedData, mode: Mode) -> Result<(), CompletionError> {
    if target.mode == mode {
        Ok(())
    } else {
        Err(CompletionError::Malformed(format!("expected a {mode} prescription, got {}", target.mode)))
    }
}

/// Polynomial `W` for polynomial data, in terms of `deg lcm` and `max`.
pub fn complete_polynomial(source: &StructuralData, target: &PrescribedData) -> Result<Verdict, CompletionError> {
    require_mode(target, Mode::Complete)?;
    let pb = match Problem::new(source, target, Ring::Polynomial)? {
        Ok(pb) => pb,
        Err(v) => return Ok(v),
    };
    if pb.z == 0 {
        return Ok(pb.literal());
    }
    let (r, x) = (pb.r, pb.x);
    let seq = sequences::polynomial(&pb);
    let beta = &pb.finite().eps;
    let lhs =
        (1..=r).map(|i| poly_lcm(&source.eta()[i - 1], &beta[i + x - 1]).deg() + pb.p(i).max(pb.q(i + x))).sum::<i64>();
    let rhs = pb.v().sum() - pb.u().sum() + (1..=r).map(|i| beta[i + x - 1].deg() + pb.q(i + x)).sum::<i64>();
    let conditions = vec![
        num_interlacing(source.eta(), beta, pb.z, pb.field),
        order_interlacing(source.orders(), target.orders.as_deref().unwrap_or_default(), pb.z),
        eta_bar(&pb),
        gen_maj_condition("col-majorization", "c majorized by (d, a)", pb.c(), &pb.d(), &seq.a)?,
        gen_maj_condition("row-majorization", "v majorized by (u, b)", &pb.v(), pb.u(), &seq.b)?,
        Condition::inequality(
            "degree-sum",
            if x == 0 { "degree sum (equality since x = 0)" } else { "degree sum" },
            lhs,
            rhs,
            x == 0,
        ),
    ];
    Ok(Verdict::from_conditions(conditions).with_sequences(seq.a, seq.b))
}

/// The complete polynomial conditions with orders measured from `p_1` and
/// `q_1`. Equivalent to [`complete_polynomial`].
pub fn degree_fixed_conditions(source: &StructuralData, target: &PrescribedData) -> Result<Verdict, CompletionError> {
    require_mode(target, Mode::Complete)?;
    let pb = match Problem::new(source, target, Ring::Polynomial)? {
        Ok(pb) => pb,
        Err(v) => return Ok(v),
    };
    if pb.z == 0 {
        return Ok(pb.literal());
    }
    let (r, x, z) = (pb.r, pb.x, pb.z);
    let p1 = source.orders().first().copied().unwrap_or(0);
    let q1 = if r + x > 0 { pb.q(1) } else { 0 };
    let e = |i: usize| pb.p(i) - p1;
    let f = |k: usize| pb.q(k) - q1;
    let failure = (1..=r).find_map(|i| {
        let mid = e(i) + p1 - q1;
        let lo = f(i);
        let hi = (i + z <= r + x).then(|| f(i + z));
        if lo > mid {
            Some(format!("i={i}: f_i = {lo} > e_i + p_1 - q_1 = {mid}"))
        } else {
            hi.filter(|&h| mid > h).map(|h| format!("i={i}: e_i + p_1 - q_1 = {mid} > f_(i+{z}) = {h}"))
        }
    });
    let beta = &pb.finite().eps;
    let lhs = (1..=r)
        .map(|i| poly_lcm(&source.eta()[i - 1], &beta[i + x - 1]).deg() + (e(i) + p1 - q1).max(f(i + x)))
        .sum::<i64>();
    let rhs = pb.v().sum() - pb.u().sum() + (1..=r).map(|i| beta[i + x - 1].deg() + f(i + x)).sum::<i64>();
    let seq = sequences::degree_fixed(&pb);
    let conditions = vec![
        num_interlacing(source.eta(), beta, z, pb.field),
        Condition::new(
            "order-interlacing",
            format!("f_i <= e_i + p_1 - q_1 <= f_(i+{z})"),
            failure.is_none(),
            failure.unwrap_or_else(|| "all hold".into()),
            "",
        ),
        eta_bar(&pb),
        gen_maj_condition("col-majorization", "c majorized by (d, a)", pb.c(), &pb.d(), &seq.a)?,
        gen_maj_condition("row-majorization", "v majorized by (u, b)", &pb.v(), pb.u(), &seq.b)?,
        Condition::inequality(
            "degree-sum",
            if x == 0 { "degree sum (equality since x = 0)" } else { "degree sum" },
            lhs,
            rhs,
            x == 0,
        ),
    ];
    Ok(Verdict::from_conditions(conditions).with_sequences(seq.a, seq.b))
}

/// The polynomial problem obtained by multiplying source and target by
/// `psi_1`, the first target denominator.
pub fn scale_problem(
    source: &StructuralData,
    target: &PrescribedData,
) -> Result<(StructuralData, PrescribedData), CompletionError> {
    let chains = target
        .finite
        .as_ref()
        .ok_or_else(|| CompletionError::Malformed("scaling needs the target finite structure".into()))?;
    let field = source.field();
    let psi1 = chains.psi.first().cloned().unwrap_or_else(|| Poly::one(field));
    let scaled_source = scale_data(source, &psi1)?;
    let beta = chains
        .eps
        .iter()
        .zip(&chains.psi)
        .map(|(e, p)| {
            let k =
                psi1.exact_div(p).ok_or_else(|| CompletionError::Malformed(format!("{p} does not divide {psi1}")))?;
            Ok((&k * e).monic())
        })
        .collect::<Result<Vec<_>, CompletionError>>()?;
    let shift = psi1.deg();
    let scaled_target = PrescribedData {
        finite: Some(FiniteChains::polynomial(field, beta)),
        orders: target.orders.as_ref().map(|q| q.iter().map(|v| v - shift).collect()),
        first_order: target.first_order.map(|v| v - shift),
        ..target.clone()
    };
    Ok((scaled_source, scaled_target))
}

/// Rational `W` for rational data, in terms of `Δ`. Cross-checked against
/// [`complete_polynomial`] on the `psi_1`-scaled problem.
pub fn complete_rational(source: &StructuralData, target: &PrescribedData) -> Result<Verdict, CompletionError> {
    let verdict = complete_rational_direct(source, target)?;
    if verdict.status == super::Status::HypothesisViolated || target.z == 0 {
        return Ok(verdict);
    }
    let field = source.field();
    let phi1 = source.phi().first().cloned().unwrap_or_else(|| Poly::one(field));
    let psi1 = target.finite.as_ref().and_then(|f| f.psi.first().cloned()).unwrap_or_else(|| Poly::one(field));
    if !phi1.divides(&psi1) {
        if verdict.feasible() {
            return Err(CompletionError::Internal(format!(
                "feasible although phi_1 = {phi1} does not divide psi_1 = {psi1}"
            )));
        }
        return Ok(verdict);
    }
    let (s, t) = scale_problem(source, target)?;
    let poly = complete_polynomial(&s, &t)?;
    if poly.status != verdict.status || poly.a != verdict.a || poly.b != verdict.b {
        return Err(CompletionError::Internal(format!(
            "rational route says {:?} with a = {:?}, b = {:?}; scaled polynomial route says {:?} with a = {:?}, b = {:?}",
            verdict.status, verdict.a, verdict.b, poly.status, poly.a, poly.b
        )));
    }
    Ok(verdict)
}

/// [`complete_rational`] without the cross-check.
pub fn complete_rational_direct(source: &StructuralData, target: &PrescribedData) -> Result<Verdict, CompletionError> {
    require_mode(target, Mode::Complete)?;
    let pb = match Problem::new(source, target, Ring::Rational)? {
        Ok(pb) => pb,
        Err(v) => return Ok(v),
    };
    if pb.z == 0 {
        return Ok(pb.literal());
    }
    let (r, x, z) = (pb.r, pb.x, pb.z);
    let seq = sequences::row_side(&pb);
    let lhs = (1..=r).map(|i| pair_delta(&pb, i, i + x) - target_delta(&pb, i + x)).sum::<i64>();
    let rhs = pb.v().sum() - pb.u().sum();
    let chains = pb.finite();
    let conditions = vec![
        eta_bar(&pb),
        num_interlacing(source.eta(), &chains.eps, z, pb.field),
        den_interlacing(source.phi(), &chains.psi, z, pb.field),
        order_interlacing(source.orders(), target.orders.as_deref().unwrap_or_default(), z),
        gen_maj_condition("col-majorization", "c majorized by (d, a)", pb.c(), &pb.d(), &seq.a)?,
        gen_maj_condition("row-majorization", "v majorized by (u, b)", &pb.v(), pb.u(), &seq.b)?,
        Condition::inequality(
            "degree-sum",
            if x == 0 { "degree sum (equality since x = 0)" } else { "degree sum" },
            lhs,
            rhs,
            x == 0,
        ),
    ];
    Ok(Verdict::from_conditions(conditions).with_sequences(seq.a, seq.b))
}
