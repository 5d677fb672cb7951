use proptest::prelude::*;

use matcomp::completion::{check, Mode, PrescribedData, Ring};
use matcomp::field::Field;
use matcomp::oracle::{random_instance, random_rational_instance};
use matcomp::structure::complete_structural_data;
use matcomp_cli::doc::{MatrixDocument, StructureDocument, TargetDocument, VerdictDocument};
use matcomp_cli::parse_json;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(2)), Just(Field::Prime(5)), Just(Field::Prime(7))]
}

fn matrix() -> impl Strategy<Value = matcomp::matrix::RatMatrix> {
    (field(), 1usize..=3, 1usize..=3, 0usize..=2, 0usize..=2, any::<u64>())
        .prop_map(|(f, m, n, d, den, seed)| random_rational_instance(f, m, n, d, den, seed))
}

fn round_trip<T: serde::Serialize + serde::de::DeserializeOwned>(value: &T) -> T {
    parse_json(&serde_json::to_string(value).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrices_round_trip(m in matrix()) {
        let doc = MatrixDocument::from_matrix(&m);
        let back = round_trip(&doc);
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_matrix().unwrap(), m);
    }

    #[test]
    fn structure_documents_round_trip(m in matrix()) {
        let data = complete_structural_data(&m).unwrap();
        let doc = StructureDocument::from_data(&data);
        prop_assert_eq!(round_trip(&doc).to_data().unwrap(), data);
    }

    #[test]
    fn targets_and_verdicts_round_trip(f in field(), n in 1usize..=3, seed in any::<u64>()) {
        let p = random_instance(f, 1, n, 1, seed);
        let q = p.vstack(&random_instance(f, 1, n, 2, seed ^ 1)).unwrap();
        let src = complete_structural_data(&p.to_rat()).unwrap();
        let reached = complete_structural_data(&q.to_rat()).unwrap();
        let full = PrescribedData::from_data(&reached, src.rank(), 1, Mode::Complete);
        for mode in Mode::ALL {
            let t = full.project(mode).unwrap();
            let doc = TargetDocument::from_prescribed(&t);
            prop_assert_eq!(round_trip(&doc).to_prescribed(f).unwrap(), t.clone());
            let v = VerdictDocument::new(mode, Ring::Rational, false, check(&src, &t, Ring::Rational).unwrap());
            prop_assert_eq!(round_trip(&v), v);
        }
    }
}

#[test]
fn field_descriptors() {
    let doc: MatrixDocument = parse_json(r#"{"field": {"GF": 4}, "rows": 1, "cols": 1, "entries": [["1"]]}"#).unwrap();
    assert!(doc.to_matrix().is_err());
    let doc: MatrixDocument = parse_json(r#"{"field": "R", "rows": 1, "cols": 1, "entries": [["1"]]}"#).unwrap();
    assert!(doc.to_matrix().is_err());
}

#[test]
fn text_and_coefficient_forms_agree() {
    let a: MatrixDocument = parse_json(
        r#"{"field": "Q", "rows": 1, "cols": 2, "entries": [["1/2*s^2 - 3", {"num": "1", "den": "s + 1"}]]}"#,
    )
    .unwrap();
    let b: MatrixDocument = parse_json(
        r#"{"field": "Q", "rows": 1, "cols": 2, "entries": [[["-3", "0", "1/2"], {"num": ["1"], "den": ["1", "1"]}]]}"#,
    )
    .unwrap();
    assert_eq!(a.to_matrix().unwrap(), b.to_matrix().unwrap());
}

#[test]
fn families_must_match_the_mode() {
    let extra: TargetDocument =
        parse_json(r#"{"mode": "inf", "z": 1, "x": 1, "orders": [-1, 1], "col_indices": []}"#).unwrap();
    assert!(extra.to_prescribed(Field::Rational).is_err());
    let missing: TargetDocument = parse_json(r#"{"mode": "fin-inf", "z": 1, "x": 1, "orders": [-1, 1]}"#).unwrap();
    assert!(missing.to_prescribed(Field::Rational).is_err());
    assert!(parse_json::<TargetDocument>(r#"{"mode": "inf", "z": 1, "x": 1, "orderz": []}"#).is_err());
}
