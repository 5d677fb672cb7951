use super::*;
use crate::matrix::{PolyMatrix, RatMatrix};
use crate::structure::{complete_structural_data, polynomial_structural_data};

const Q: Field = Field::Rational;

fn q(c: &[i64]) -> Poly {
    Poly::from_i64s(Q, c)
}

fn s_zero() -> StructuralData {
    polynomial_structural_data(&PolyMatrix::from_i64s(Q, &[&[&[0, 1], &[]]]).unwrap()).unwrap()
}

fn prescribed(mode: Mode, z: usize, x: usize) -> PrescribedData {
    PrescribedData { mode, z, x, finite: None, orders: None, first_order: None, col_indices: None, row_indices: None }
}

#[test]
fn inf_only_depends_on_ring() {
    let t = PrescribedData { orders: Some(vec![-1, 1]), ..prescribed(Mode::InfOnly, 1, 1) };
    let poly = check(&s_zero(), &t, Ring::Polynomial).unwrap();
    assert_eq!(poly.status, Status::Infeasible);
    let failing: Vec<_> = poly.failing().collect();
    assert_eq!(failing.len(), 1);
    assert_eq!((failing[0].lhs.as_str(), failing[0].rhs.as_str()), ("1", "0"));
    assert!(check(&s_zero(), &t, Ring::Rational).unwrap().feasible());
}

#[test]
fn diag_s_inverse_s_is_a_rational_completion() {
    let r = RatMatrix::from_rows(
        Q,
        vec![
            vec![RatFunc::from_poly(q(&[0, 1]), Q), RatFunc::zero(Q)],
            vec![RatFunc::zero(Q), RatFunc::new(q(&[1]), q(&[0, 1])).unwrap()],
        ],
    )
    .unwrap();
    let target = complete_structural_data(&r).unwrap();
    assert_eq!(target.orders(), &[-1, 1]);
    assert_eq!(target.eta(), &[q(&[1]), q(&[0, 1])]);
    assert_eq!(target.phi(), &[q(&[0, 1]), q(&[1])]);
    let t = PrescribedData::from_data(&target, 1, 1, Mode::Complete);
    let v = check(&s_zero(), &t, Ring::Rational).unwrap();
    assert!(v.feasible(), "{v:?}");
}

#[test]
fn complete_polynomial_small_example() {
    let t = PrescribedData {
        finite: Some(FiniteChains::polynomial(Q, vec![q(&[0, 1]), q(&[0, 1])])),
        orders: Some(vec![-1, -1]),
        col_indices: Some(vec![]),
        row_indices: Some(vec![]),
        ..prescribed(Mode::Complete, 1, 1)
    };
    let v = check(&s_zero(), &t, Ring::Polynomial).unwrap();
    assert!(v.feasible(), "{v:?}");
    assert_eq!(v.a, vec![0]);
    let fixed = degree_fixed_conditions(&s_zero(), &t).unwrap();
    assert_eq!((fixed.status, fixed.a, fixed.b), (v.status, v.a.clone(), v.b.clone()));
    let rational = check(&s_zero(), &t, Ring::Rational).unwrap();
    assert_eq!(rational.status, v.status);
    assert!(pencil_via_companion(&s_zero(), &t).unwrap().feasible());
}

#[test]
fn first_order_example() {
    let t = PrescribedData {
        finite: Some(FiniteChains::polynomial(Q, vec![q(&[0, 1]), q(&[0, 1])])),
        first_order: Some(-1),
        ..prescribed(Mode::FinFirstOrder, 1, 1)
    };
    let v = check(&s_zero(), &t, Ring::Polynomial).unwrap();
    assert!(v.feasible());
    let c = v.conditions.iter().find(|c| c.id == "first-order[j=0]").unwrap();
    assert_eq!((c.lhs.as_str(), c.rhs.as_str()), ("1", "1"));
    let above = PrescribedData { first_order: Some(0), ..t };
    assert_eq!(check(&s_zero(), &above, Ring::Polynomial).unwrap().status, Status::HypothesisViolated);
}

#[test]
fn rank_increment_beyond_hypothesis() {
    let t = PrescribedData {
        finite: Some(FiniteChains::polynomial(Q, vec![q(&[1]); 3])),
        ..prescribed(Mode::FinOnly, 1, 2)
    };
    assert_eq!(check(&s_zero(), &t, Ring::Polynomial).unwrap().status, Status::HypothesisViolated);
}

#[test]
fn zero_rows_compare_literally() {
    let src = s_zero();
    let same = PrescribedData::from_data(&src, 1, 0, Mode::Complete);
    assert!(check(&src, &same, Ring::Polynomial).unwrap().feasible());
    let other = PrescribedData { orders: Some(vec![-2]), ..same };
    let v = check(&src, &other, Ring::Polynomial).unwrap();
    assert_eq!(v.status, Status::Infeasible);
    assert!(v.conditions.iter().any(|c| c.id == "literal-orders" && !c.holds));
}

#[test]
fn malformed_prescriptions_are_rejected() {
    let short =
        PrescribedData { finite: Some(FiniteChains::polynomial(Q, vec![q(&[1])])), ..prescribed(Mode::FinOnly, 1, 1) };
    assert!(matches!(check(&s_zero(), &short, Ring::Polynomial), Err(CompletionError::Malformed(_))));
    let extra = PrescribedData { orders: Some(vec![0, 0]), ..short.clone() };
    assert!(matches!(check(&s_zero(), &extra, Ring::Polynomial), Err(CompletionError::Malformed(_))));
    let rational_target = PrescribedData {
        finite: Some(FiniteChains { eps: vec![q(&[1]), q(&[1])], psi: vec![q(&[0, 1]), q(&[1])] }),
        ..prescribed(Mode::FinOnly, 1, 1)
    };
    assert!(matches!(check(&s_zero(), &rational_target, Ring::Polynomial), Err(CompletionError::Malformed(_))));
    assert!(check(&s_zero(), &rational_target, Ring::Rational).is_ok());
}

#[test]
fn sum_identity_decides_existence() {
    let bad = StructuralData::new(Q, (1, 1), vec![q(&[0, 1])], vec![q(&[1])], vec![0], vec![], vec![]).unwrap();
    let v = exists_with_data(&bad, Ring::Rational).unwrap();
    assert_eq!(v.status, Status::Infeasible);
    assert_eq!(v.conditions[0].lhs, "1");
    assert!(exists_with_data(&s_zero(), Ring::Polynomial).unwrap().feasible());
}

#[test]
fn delta_notation() {
    let f = RatFunc::new(q(&[0, 0, 1]), q(&[1, 1])).unwrap();
    let g = RatFunc::new(q(&[0, 1]), q(&[1, 1])).unwrap();
    assert_eq!(delta(&f, Some(&g), Some(-1), Some(2)), 2 - 1 + 2);
    assert_eq!(delta(&f, Some(&g), None, None), 1);
    assert_eq!(delta(&f, None, Some(3), None), 1 + 3);
    assert_eq!(delta(&f, None, None, None), 1);
}

#[test]
fn lcm_identity() {
    let pi = q(&[0, 1, 1]);
    assert!(lcm_scaled_identity_check(&q(&[0, 1]), &q(&[2, 1]), &q(&[1, 1]), &q(&[3, 1]), &pi).unwrap());
    assert!(lcm_scaled_identity_check(&q(&[0, 1]), &q(&[0, 1]), &q(&[1]), &q(&[1]), &pi).is_err());
}

#[test]
fn column_completion_transposes() {
    // [s; 0] with one added column.
    let src = s_zero().transpose();
    let t = PrescribedData { orders: Some(vec![-1, 1]), ..prescribed(Mode::InfOnly, 1, 1) };
    assert_eq!(column_completion(&src, &t, Ring::Polynomial).unwrap().status, Status::Infeasible);
    assert!(column_completion(&src, &t, Ring::Rational).unwrap().feasible());
}
