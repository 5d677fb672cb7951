//! Row completion with only some of the families prescribed.

use super::complete::{eta_bar, gen_maj_condition};
use super::sequences::{self, pair_delta, source_delta, target_delta};
use super::{
    delta, den_interlacing, num_interlacing, order_interlacing, Condition, Mode, PrescribedData, Problem, Ring, Verdict,
};
use crate::error::CompletionError;
use crate::majorization::{ell_index, majorize, IntSeq};
use crate::structure::StructuralData;

fn setup<'a>(
    source: &'a StructuralData,
    target: &'a PrescribedData,
    mode: Mode,
    ring: Ring,
) -> Result<Result<Problem<'a>, Verdict>, CompletionError> {
    if target.mode != mode {
        return Err(CompletionError::Malformed(format!("expected a {mode} prescription, got {}", target.mode)));
    }
    Ok(match Problem::new(source, target, ring)? {
        Ok(pb) if pb.z == 0 => Err(pb.literal()),
        other => other,
    })
}

/// The three interlacing conditions for bordering by `z` rows.
fn interlacing(pb: &Problem<'_>) -> Vec<Condition> {
    let chains = pb.finite();
    vec![
        num_interlacing(pb.src.eta(), &chains.eps, pb.z, pb.field),
        den_interlacing(pb.src.phi(), &chains.psi, pb.z, pb.field),
        order_interlacing(pb.src.orders(), pb.tgt.orders.as_deref().unwrap_or_default(), pb.z),
    ]
}

/// With `l = min{j : c_1 + .. + c_j > a_1 + .. + a_j}` (or `x + 1`):
/// `c_1 + .. + c_(x+1) - c_l >= a_1 + .. + a_x` and
/// `c_(j+2) + .. + c_(x+1) >= a_(j+1) + .. + a_x` for `l <= j <= x - 1`.
/// Needs `len(c) > x`.
fn ell_conditions(c: &IntSeq, a: &[i64]) -> Vec<Condition> {
    let x = a.len();
    let c = c.as_slice();
    let ell = ell_index(c, a);
    let sum_a: i64 = a.iter().sum();
    let head: i64 = c[..=x].iter().sum::<i64>() - c[ell - 1];
    let mut out = vec![Condition::new(
        "ell-first",
        format!("c_1 + .. + c_{} - c_l >= a_1 + .. + a_{x} with l = {ell}", x + 1),
        head >= sum_a,
        head,
        sum_a,
    )];
    for j in ell..x {
        let lhs: i64 = c[j + 1..=x].iter().sum();
        let rhs: i64 = a[j..].iter().sum();
        out.push(Condition::new(
            format!("ell-tail[j={j}]"),
            format!("c_{} + .. + c_{} >= a_{} + .. + a_{x}", j + 2, x + 1, j + 1),
            lhs >= rhs,
            lhs,
            rhs,
        ));
    }
    out
}

/// Prescribed finite structure, orders and column indices.
pub fn fin_inf_col_completion(
    source: &StructuralData,
    target: &PrescribedData,
    ring: Ring,
) -> Result<Verdict, CompletionError> {
    let pb = match setup(source, target, Mode::FinInfCol, ring)? {
        Ok(pb) => pb,
        Err(v) => return Ok(v),
    };
    let (r, x) = (pb.r, pb.x);
    let seq = sequences::column_side(&pb);
    let lhs = (1..=r).map(|i| pair_delta(&pb, i, i + x)).sum::<i64>();
    let rhs = pb.c().sum() - pb.d().sum() + (1..=r).map(|i| source_delta(&pb, i)).sum::<i64>()
        - (1..=x).map(|i| target_delta(&pb, i)).sum::<i64>();
    let mut conditions = interlacing(&pb);
    conditions.push(gen_maj_condition("col-majorization", "c majorized by (d, a)", pb.c(), &pb.d(), &seq.a)?);
    conditions.push(Condition::inequality(
        "col-degree",
        if x == pb.z { "column-side degree sum (equality since x = z)" } else { "column-side degree sum" },
        lhs,
        rhs,
        x == pb.z,
    ));
    Ok(Verdict::from_conditions(conditions).with_sequences(seq.a, Vec::new()))
}

/// Prescribed finite structure, orders and row indices.
pub fn fin_inf_row_completion(
    source: &StructuralData,
    target: &PrescribedData,
    ring: Ring,
) -> Result<Verdict, CompletionError> {
    let pb = match setup(source, target, Mode::FinInfRow, ring)? {
        Ok(pb) => pb,
        Err(v) => return Ok(v),
    };
    let (r, x, n) = (pb.r, pb.x, pb.n);
    let seq = sequences::row_side(&pb);
    let lhs = (1..=r).map(|i| pair_delta(&pb, i, i + x) - target_delta(&pb, i + x)).sum::<i64>();
    let rhs = pb.v().sum() - pb.u().sum();
    let mut conditions = vec![eta_bar(&pb)];
    conditions.extend(interlacing(&pb));
    conditions.push(gen_maj_condition("row-majorization", "v majorized by (u, b)", &pb.v(), pb.u(), &seq.b)?);
    conditions.push(Condition::inequality(
        "degree-sum",
        if x == 0 { "degree sum (equality since x = 0)" } else { "degree sum" },
        lhs,
        rhs,
        x == 0,
    ));
    if x == n - r {
        let holds = majorize(pb.c().as_slice(), &seq.a)?;
        conditions.push(Condition::new(
            "c-majorized",
            "c majorized by a",
            holds,
            format!("{:?}", pb.c().as_slice()),
            format!("{:?}", seq.a),
        ));
    } else {
        conditions.extend(ell_conditions(pb.c(), &seq.a));
    }
    Ok(Verdict::from_conditions(conditions).with_sequences(seq.a, seq.b))
}

/// Prescribed finite structure and orders.
pub fn fin_inf_completion(
    source: &StructuralData,
    target: &PrescribedData,
    ring: Ring,
) -> Result<Verdict, CompletionError> {
    let pb = match setup(source, target, Mode::FinInf, ring)? {
        Ok(pb) => pb,
        Err(v) => return Ok(v),
    };
    let (r, x, z, n) = (pb.r, pb.x, pb.z, pb.n);
    let mut conditions = interlacing(&pb);
    if x < z || x == n - r {
        let c = pb.c().as_slice();
        let sum_u = pb.u().sum();
        let tail: i64 = c[x..].iter().sum();
        for j in 0..x {
            let lhs = (1..=r).map(|i| pair_delta(&pb, i, i + x - j)).sum::<i64>()
                + (1..=x - j).map(|i| target_delta(&pb, i)).sum::<i64>()
                + sum_u
                + c[..j].iter().sum::<i64>()
                + tail;
            let equality = j == 0 && x == z && x == n - r;
            conditions.push(Condition::inequality(
                format!("fin-inf[j={j}]"),
                if equality { "balance with equality since x = z = n - r" } else { "balance" },
                lhs,
                0,
                equality,
            ));
        }
        Ok(Verdict::from_conditions(conditions))
    } else {
        let a = sequences::fin_inf_only(&pb);
        conditions.extend(ell_conditions(pb.c(), &a));
        Ok(Verdict::from_conditions(conditions).with_sequences(a, Vec::new()))
    }
}

/// Prescribed orders only.
pub fn inf_only_completion(
    source: &StructuralData,
    target: &PrescribedData,
    ring: Ring,
) -> Result<Verdict, CompletionError> {
    let pb = match setup(source, target, Mode::InfOnly, ring)? {
        Ok(pb) => pb,
        Err(v) => return Ok(v),
    };
    let (r, x) = (pb.r, pb.x);
    let q = target.orders.as_deref().unwrap_or_default();
    let mut conditions = vec![order_interlacing(source.orders(), q, pb.z)];
    if ring == Ring::Polynomial {
        let c = pb.c().as_slice();
        let sum_p: i64 = source.orders().iter().sum();
        for j in 0..x {
            let lhs = (1..=r).map(|i| pb.p(i).max(pb.q(i + x - j))).sum::<i64>()
                + (1..=x - j).map(|i| pb.q(i)).sum::<i64>()
                - sum_p;
            let rhs: i64 = c[j..x].iter().sum();
            conditions.push(Condition::inequality(format!("max-sum[j={j}]"), "order balance", lhs, rhs, false));
        }
    }
    Ok(Verdict::from_conditions(conditions))
}

/// Prescribed finite structure only.
pub fn fin_only_completion(
    source: &StructuralData,
    target: &PrescribedData,
    ring: Ring,
) -> Result<Verdict, CompletionError> {
    let pb = match setup(source, target, Mode::FinOnly, ring)? {
        Ok(pb) => pb,
        Err(v) => return Ok(v),
    };
    let chains = pb.finite();
    let mut conditions = vec![num_interlacing(source.eta(), &chains.eps, pb.z, pb.field)];
    if ring == Ring::Rational {
        conditions.push(den_interlacing(source.phi(), &chains.psi, pb.z, pb.field));
    }
    Ok(Verdict::from_conditions(conditions))
}

/// Prescribed finite structure and first order `q_1`, for `q_1 <= p_1`.
pub fn fin_first_order_completion(
    source: &StructuralData,
    target: &PrescribedData,
    ring: Ring,
) -> Result<Verdict, CompletionError> {
    let pb = match setup(source, target, Mode::FinFirstOrder, ring)? {
        Ok(pb) => pb,
        Err(v) => return Ok(v),
    };
    let (r, x) = (pb.r, pb.x);
    let Some(q1) = target.first_order else {
        // Zero target: nothing beyond the finite chains.
        return Ok(Verdict::from_conditions(vec![num_interlacing(source.eta(), &pb.finite().eps, pb.z, pb.field)]));
    };
    if let Some(&p1) = source.orders().first() {
        if q1 > p1 {
            return Ok(Verdict::hypothesis_violated(Condition::new(
                "hypothesis-first-order",
                "q_1 <= p_1",
                false,
                q1,
                p1,
            )));
        }
    }
    let chains = pb.finite();
    let mut conditions = vec![
        num_interlacing(source.eta(), &chains.eps, pb.z, pb.field),
        den_interlacing(source.phi(), &chains.psi, pb.z, pb.field),
    ];
    let c = pb.c().as_slice();
    let sum_src: i64 = (1..=r).map(|i| delta(&pb.f(i), None, None, None)).sum();
    for j in 0..x {
        let lhs = (1..=r).map(|i| delta(&pb.f(i), Some(&pb.g(i + x - j)), None, None)).sum::<i64>()
            + (1..=x - j).map(|i| delta(&pb.g(i), None, None, None)).sum::<i64>()
            - sum_src;
        let rhs = c[j..x].iter().sum::<i64>() + (j as i64 - x as i64) * q1;
        conditions.push(Condition::inequality(format!("first-order[j={j}]"), "first-order balance", lhs, rhs, false));
    }
    Ok(Verdict::from_conditions(conditions))
}
