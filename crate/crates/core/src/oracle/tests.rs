use super::*;
use crate::completion::{check, Mode, PrescribedData, Ring};

fn gf2() -> Field {
    Field::Prime(2)
}

fn s_zero() -> PolyMatrix {
    PolyMatrix::from_i64s(gf2(), &[&[&[0, 1], &[]]]).unwrap()
}

#[test]
fn s_zero_reaches_s_s() {
    let space = SearchSpace::new(s_zero(), 1, 1).unwrap();
    assert_eq!(space.size(), BigUint::from(16u32));
    let set = enumerate_completions(&space, DEFAULT_BUDGET).unwrap();
    let s = Poly::s(gf2());
    let target =
        StructuralData::polynomial(gf2(), (2, 2), vec![s.clone(), s.clone()], vec![-1, -1], vec![], vec![]).unwrap();
    let idx = set.witness_index(&target).expect("diag(s, s) is reachable");
    let w = space.candidate(idx);
    assert_eq!(polynomial_structural_data(&s_zero().vstack(&w).unwrap()).unwrap(), target);
}

#[test]
fn no_rows_gives_the_source() {
    let space = SearchSpace::new(s_zero(), 0, 3).unwrap();
    let set = enumerate_completions(&space, DEFAULT_BUDGET).unwrap();
    assert_eq!(set.len(), 1);
    assert!(set.contains(&polynomial_structural_data(&s_zero()).unwrap()));
}

#[test]
fn zero_source_constant_rows() {
    let space = SearchSpace::new(PolyMatrix::zeros(gf2(), 1, 1), 1, 0).unwrap();
    assert_eq!(space.size(), BigUint::from(2u32));
    let set = enumerate_completions(&space, DEFAULT_BUDGET).unwrap();
    assert_eq!(set.len(), 2);
    assert!(set.members().any(|d| d.rank() == 0));
    assert!(set.members().any(|d| d.rank() == 1 && d.row_indices().as_slice() == [0]));
}

#[test]
fn budget_is_enforced() {
    let space = SearchSpace::new(s_zero(), 1, 3).unwrap();
    assert!(matches!(enumerate_completions(&space, 1), Err(OracleError::BudgetExceeded { .. })));
    assert!(matches!(
        SearchSpace::new(PolyMatrix::zeros(Field::Rational, 1, 1), 1, 0),
        Err(OracleError::InfiniteField(_))
    ));
}

#[test]
fn example_orders_are_out_of_reach() {
    let space = SearchSpace::new(s_zero(), 1, 2).unwrap();
    let set = enumerate_completions(&space, DEFAULT_BUDGET).unwrap();
    assert!(set.members().all(|d| d.orders() != [-1, 1]));
    let src = polynomial_structural_data(&s_zero()).unwrap();
    let t = PrescribedData {
        mode: Mode::InfOnly,
        z: 1,
        x: 1,
        finite: None,
        orders: Some(vec![-1, 1]),
        first_order: None,
        col_indices: None,
        row_indices: None,
    };
    assert!(!check(&src, &t, Ring::Polynomial).unwrap().feasible());
}

#[test]
fn random_instances_are_reproducible() {
    let a = random_instance(Field::Prime(5), 2, 3, 2, 7);
    assert_eq!(a, random_instance(Field::Prime(5), 2, 3, 2, 7));
    let d = polynomial_structural_data(&a).unwrap();
    assert_eq!(d.sum_identity(), 0);
    assert_eq!(all_matrices(gf2(), 2, 2, 1, DEFAULT_BUDGET).unwrap().len(), 256);
}

#[test]
fn sampling_is_deterministic() {
    let space = SearchSpace::new(s_zero(), 1, 2).unwrap();
    let a = sample_completions(&space, 20, 3).unwrap();
    let b = sample_completions(&space, 20, 3).unwrap();
    assert!(!a.is_exhaustive());
    assert_eq!(a.members().collect::<Vec<_>>(), b.members().collect::<Vec<_>>());
}

#[test]
fn enumerators() {
    assert_eq!(partitions(2, 3), vec![vec![3, 0], vec![2, 1]]);
    assert_eq!(partitions(0, 0), vec![Vec::<i64>::new()]);
    assert!(partitions(0, 1).is_empty());
    assert_eq!(split_partitions(1, 1, 1).len(), 2);
    assert_eq!(order_sequences(2, -1, None, 0), vec![vec![-1, -1], vec![-1, 0], vec![-1, 1], vec![0, 0]]);
    assert_eq!(order_sequences(2, -5, Some(-1), -1), vec![vec![-1, -1], vec![-1, 0]]);
    assert_eq!(monic_polys(gf2(), 2).len(), 4);
    // 1|1, 1|s, 1|s+1, s|s, s+1|s+1 and 1|h for the four monic quadratics.
    assert_eq!(divisor_chains(gf2(), 2, 2).len(), 9);
}
