use proptest::prelude::*;

use matcomp::completion::{
    check, column_completion, complete_polynomial, degree_fixed_conditions, lcm_scaled_identity_check,
    pencil_via_companion, Mode, PrescribedData, Ring, Verdict,
};
use matcomp::field::Field;
use matcomp::matrix::{PolyMatrix, RatMatrix};
use matcomp::oracle::{near_misses, random_instance, random_rational_instance};
use matcomp::poly::{poly_gcd, poly_lcm, Poly};
use matcomp::structure::{complete_structural_data, polynomial_structural_data, StructuralData};

fn small_field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Prime(2)), Just(Field::Prime(3))]
}

/// A source `P` and added rows `W`, both polynomial.
#[derive(Debug, Clone)]
struct Stack {
    p: PolyMatrix,
    w: PolyMatrix,
}

fn stack() -> impl Strategy<Value = Stack> {
    (small_field(), 1usize..=2, 1usize..=3, 0usize..=1, 0usize..=2, 0usize..=2, any::<u64>()).prop_map(
        |(field, m, n, deg, z, wdeg, seed)| Stack {
            p: random_instance(field, m, n, deg, seed),
            w: random_instance(field, z, n, wdeg, seed.wrapping_add(1)),
        },
    )
}

fn rational_stack() -> impl Strategy<Value = (RatMatrix, RatMatrix)> {
    (small_field(), 1usize..=2, 2usize..=3, 1usize..=2, any::<u64>()).prop_map(|(field, m, n, z, seed)| {
        (
            random_rational_instance(field, m, n, 1, 1, seed),
            random_rational_instance(field, z, n, 1, 1, seed.wrapping_add(1)),
        )
    })
}

fn data(p: &PolyMatrix) -> StructuralData {
    polynomial_structural_data(p).expect("extraction")
}

fn stacked(s: &Stack) -> StructuralData {
    data(&s.p.vstack(&s.w).expect("same width"))
}

fn targets(source: &StructuralData, reached: &StructuralData, z: usize) -> Vec<PrescribedData> {
    std::iter::once(reached.clone())
        .chain(near_misses(reached).into_iter().step_by(5))
        .filter(|t| t.rank() >= source.rank())
        .map(|t| PrescribedData::from_data(&t, source.rank(), z, Mode::Complete))
        .filter(|t| t.x <= z.min(source.cols() - source.rank()))
        .collect()
}

fn failing_ids(v: &Verdict) -> Vec<String> {
    v.failing().map(|c| c.id.clone()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_constructed_completion_is_accepted(s in stack()) {
        let src = data(&s.p);
        let reached = stacked(&s);
        let full = PrescribedData::from_data(&reached, src.rank(), s.w.rows(), Mode::Complete);
        for mode in Mode::ALL {
            let t = full.project(mode).unwrap();
            for ring in [Ring::Polynomial, Ring::Rational] {
                let v = check(&src, &t, ring).unwrap();
                prop_assert!(v.feasible(), "{mode} {ring:?} rejects {reached}: {:?}", failing_ids(&v));
            }
        }
    }

    #[test]
    fn every_constructed_rational_completion_is_accepted((r, w) in rational_stack()) {
        let src = complete_structural_data(&r).unwrap();
        let reached = complete_structural_data(&r.vstack(&w).unwrap()).unwrap();
        let full = PrescribedData::from_data(&reached, src.rank(), w.rows(), Mode::Complete);
        for mode in Mode::ALL {
            let v = check(&src, &full.project(mode).unwrap(), Ring::Rational).unwrap();
            prop_assert!(v.feasible(), "{mode} rejects {reached}: {:?}", failing_ids(&v));
        }
    }

    #[test]
    fn every_constructed_column_completion_is_accepted(s in stack()) {
        // [P^T W^T] is the transpose of [P; W].
        let src = data(&s.p.transpose());
        let reached = stacked(&s).transpose();
        let full = PrescribedData::from_data(&reached, src.rank(), s.w.rows(), Mode::Complete);
        for mode in Mode::ALL {
            let v = column_completion(&src, &full.project(mode).unwrap(), Ring::Polynomial).unwrap();
            prop_assert!(v.feasible(), "{mode} rejects {reached}: {:?}", failing_ids(&v));
        }
    }

    #[test]
    fn double_transposition_is_the_identity(s in stack()) {
        let src = data(&s.p);
        for t in targets(&src, &stacked(&s), s.w.rows()) {
            for mode in Mode::ALL {
                let t = t.project(mode).unwrap();
                let direct = check(&src, &t, Ring::Polynomial).unwrap();
                let twice = column_completion(&src.transpose(), &t.transposed(), Ring::Polynomial).unwrap();
                prop_assert_eq!(direct, twice);
            }
        }
    }

    #[test]
    fn degree_fixed_form_agrees(s in stack()) {
        let src = data(&s.p);
        for t in targets(&src, &stacked(&s), s.w.rows()) {
            let general = complete_polynomial(&src, &t).unwrap();
            let fixed = degree_fixed_conditions(&src, &t).unwrap();
            prop_assert_eq!(general.status, fixed.status);
            prop_assert_eq!(&general.a, &fixed.a);
            prop_assert_eq!(&general.b, &fixed.b);
            for c in &general.conditions {
                if let Some(d) = fixed.conditions.iter().find(|d| d.id == c.id) {
                    prop_assert_eq!(c.holds, d.holds, "condition {}", c.id);
                }
            }
        }
    }

    #[test]
    fn companion_route_agrees(s in stack()) {
        let src = data(&s.p);
        let least = src.degree().unwrap_or(0).max(1);
        let targets = targets(&src, &stacked(&s), s.w.rows());
        for t in targets.into_iter().filter(|t| t.orders.as_ref().and_then(|q| q.first()).is_some_and(|q1| -q1 >= least)) {
            let direct = complete_polynomial(&src, &t).unwrap();
            let pencil = pencil_via_companion(&src, &t).unwrap();
            prop_assert_eq!(direct.feasible(), pencil.feasible(), "{:?}", t);
        }
    }

    #[test]
    fn feasible_sequences_are_non_increasing(s in stack()) {
        let src = data(&s.p);
        for t in targets(&src, &stacked(&s), s.w.rows()) {
            let v = complete_polynomial(&src, &t).unwrap();
            if v.feasible() {
                prop_assert!(v.a.windows(2).all(|w| w[0] >= w[1]), "a = {:?}", v.a);
                prop_assert!(v.b.windows(2).all(|w| w[0] >= w[1]), "b = {:?}", v.b);
                prop_assert!(v.b.last().is_none_or(|&b| b >= 0), "b = {:?}", v.b);
            }
        }
    }

    #[test]
    fn sum_identity_holds((r, _) in rational_stack()) {
        prop_assert_eq!(complete_structural_data(&r).unwrap().sum_identity(), 0);
    }

    #[test]
    fn lcm_identity_holds(
        (phi, eta, psi, eps, extra) in (
            proptest::collection::vec(0i64..5, 0..3),
            proptest::collection::vec(0i64..5, 0..4),
            proptest::collection::vec(0i64..5, 0..3),
            proptest::collection::vec(0i64..5, 0..4),
            proptest::collection::vec(0i64..5, 0..3),
        )
    ) {
        let monic = |c: &[i64]| {
            let mut c = c.to_vec();
            c.push(1);
            Poly::from_i64s(Field::Prime(5), &c)
        };
        let (phi, eta, psi, eps) = (monic(&phi), monic(&eta), monic(&psi), monic(&eps));
        prop_assume!(poly_gcd(&phi, &eta).is_one() && poly_gcd(&psi, &eps).is_one());
        let pi = &poly_lcm(&phi, &psi) * &monic(&extra);
        prop_assert!(lcm_scaled_identity_check(&phi, &eta, &psi, &eps, &pi).unwrap());
    }

    #[test]
    fn verdicts_round_trip_through_json(s in stack()) {
        let src = data(&s.p);
        for t in targets(&src, &stacked(&s), s.w.rows()) {
            let v = complete_polynomial(&src, &t).unwrap();
            let text = serde_json::to_string(&v).unwrap();
            prop_assert_eq!(serde_json::from_str::<Verdict>(&text).unwrap(), v);
        }
    }
}
