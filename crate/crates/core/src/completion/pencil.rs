//! Row completion of pencils, in terms of homogeneous invariant factors.

use super::complete::gen_maj_condition;
use super::{exists_with_data, Condition, PrescribedData, Ring, Verdict};
use crate::error::CompletionError;
use crate::field::Field;
use crate::majorization::IntSeq;
use crate::structure::{companion_data_map, homogeneous_from_data, HomogeneousFactor, StructuralData};

/// Homogeneous invariant factors and minimal indices of a pencil.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilData {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    pub factors: Vec<HomogeneousFactor>,
    pub col_indices: IntSeq,
    pub row_indices: IntSeq,
}

impl PencilData {
    /// Reads pencil data off polynomial data of degree at most 1.
    pub fn from_structural(data: &StructuralData) -> Result<Self, CompletionError> {
        if !data.is_polynomial() {
            return Err(CompletionError::Malformed("pencil data must be polynomial".into()));
        }
        if data.orders().iter().any(|&p| p < -1) {
            return Err(CompletionError::Malformed(format!("orders {:?} exceed degree 1", data.orders())));
        }
        Ok(PencilData {
            field: data.field(),
            rows: data.rows(),
            cols: data.cols(),
            factors: homogeneous_from_data(data, 1),
            col_indices: data.col_indices().clone(),
            row_indices: data.row_indices().clone(),
        })
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// `phi_k`, with `(1, 0)` for `k < 1`.
    fn factor(&self, k: i64) -> HomogeneousFactor {
        if k < 1 {
            HomogeneousFactor::one(self.field)
        } else {
            self.factors[k as usize - 1].clone()
        }
    }
}

/// Whether `target` is the data of `[C; D]` for some pencil `D` of `x + y`
/// rows, where `C` has the data `source` and the rank grows by `x`.
pub fn pencil_row_completion(
    source: &PencilData,
    target: &PencilData,
    x: usize,
    y: usize,
) -> Result<Verdict, CompletionError> {
    let r = source.rank();
    if target.cols != source.cols || target.rows != source.rows + x + y || target.rank() != r + x {
        return Err(CompletionError::Malformed(format!(
            "target {}x{} of rank {} does not fit source {}x{} of rank {r} with x = {x}, y = {y}",
            target.rows,
            target.cols,
            target.rank(),
            source.rows,
            source.cols
        )));
    }
    let gamma = &target.factors;
    let shift = x + y;
    let failure = (1..=r).find_map(|i| {
        let phi = &source.factors[i - 1];
        if !gamma[i - 1].divides(phi) {
            Some(format!("i={i}: gamma_i does not divide phi_i"))
        } else if i + shift <= gamma.len() && !phi.divides(&gamma[i + shift - 1]) {
            Some(format!("i={i}: phi_i does not divide gamma_(i+{shift})"))
        } else {
            None
        }
    });
    let base =
        target.row_indices.sum() - source.row_indices.sum() + gamma.iter().map(HomogeneousFactor::degree).sum::<i64>();
    let lcm_sum = |offset: i64, upto: usize| -> i64 {
        (1..=upto).map(|i| source.factor(i as i64 + offset).lcm(&gamma[i - 1]).degree()).sum()
    };
    let mut prev = 0;
    let a: Vec<i64> = (1..=x)
        .map(|j| {
            let s = base - lcm_sum(j as i64 - x as i64, r + x - j) - j as i64;
            let v = s - prev;
            prev = s;
            v
        })
        .collect();
    prev = 0;
    let b: Vec<i64> = (1..=y)
        .map(|j| {
            let s = base - lcm_sum(-(x as i64) - j as i64, r + x);
            let v = s - prev;
            prev = s;
            v
        })
        .collect();
    let theta = (target.row_indices.positive_count(), source.row_indices.positive_count());
    let lhs = lcm_sum(-(x as i64), r + x);
    let conditions = vec![
        Condition::new(
            "homogeneous-interlacing",
            format!("gamma_i | phi_i | gamma_(i+{shift})"),
            failure.is_none(),
            failure.unwrap_or_else(|| "all hold".into()),
            "",
        ),
        Condition::new("theta-bar", "#{v_i > 0} >= #{u_i > 0}", theta.0 >= theta.1, theta.0, theta.1),
        gen_maj_condition("col-majorization", "c majorized by (d, a)", &source.col_indices, &target.col_indices, &a)?,
        gen_maj_condition("row-majorization", "v majorized by (u, b)", &target.row_indices, &source.row_indices, &b)?,
        Condition::inequality("degree-sum", "homogeneous degree sum", lhs, base, false),
    ];
    Ok(Verdict::from_conditions(conditions).with_sequences(a, b))
}

/// The pencil predicate on the companion forms of grade `g = -q_1`, which
/// decides the same question as the polynomial complete predicate when
/// `g >= max(deg P, 1)`. The target data must also be realizable, which
/// the pencil predicate takes for granted; that check comes first.
pub fn pencil_via_companion(source: &StructuralData, target: &PrescribedData) -> Result<Verdict, CompletionError> {
    let missing = || CompletionError::Malformed("companion route needs a complete prescription".into());
    let finite = target.finite.as_ref().ok_or_else(missing)?;
    let orders = target.orders.clone().ok_or_else(missing)?;
    let grade = -*orders.first().ok_or_else(|| CompletionError::Malformed("zero target has no grade".into()))?;
    if grade < 1 {
        return Err(CompletionError::Malformed(format!("companion route needs a target of degree >= 1, got {grade}")));
    }
    let source_degree = source.degree().unwrap_or(0);
    if grade < source_degree {
        return Ok(Verdict::from_conditions(vec![Condition::inequality(
            "grade",
            "deg P <= deg Q",
            source_degree,
            grade,
            false,
        )]));
    }
    let full = StructuralData::polynomial(
        source.field(),
        (source.rows() + target.z, source.cols()),
        finite.eps.clone(),
        orders,
        target.col_indices.clone().ok_or_else(missing)?,
        target.row_indices.clone().ok_or_else(missing)?,
    )?;
    let exists = exists_with_data(&full, Ring::Polynomial)?;
    let src = PencilData::from_structural(&companion_data_map(source, grade)?)?;
    let tgt = PencilData::from_structural(&companion_data_map(&full, grade)?)?;
    let pencil = pencil_row_completion(&src, &tgt, target.x, target.z - target.x)?;
    let conditions = exists.conditions.into_iter().chain(pencil.conditions).collect();
    Ok(Verdict::from_conditions(conditions).with_sequences(pencil.a, pencil.b))
}
