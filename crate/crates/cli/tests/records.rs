use congruent6::elliptic::Curve;
use congruent6::exact::rat;
use congruent6_cli::{batch_ingest, parse_records, serialize_records, CurveRecord};
use proptest::prelude::*;

fn record() -> impl Strategy<Value = CurveRecord> {
    (proptest::option::of("[a-z0-9]{1,8}"), (-50i64..50, 1i64..20), (-50i64..50, 1i64..20)).prop_filter_map(
        "singular",
        |(label, (an, ad), (bn, bd))| {
            Curve::new(rat(an, ad), rat(bn, bd)).ok().map(|curve| CurveRecord { label, curve })
        },
    )
}

proptest! {
    #[test]
    fn round_trip(records in proptest::collection::vec(record(), 0..8)) {
        prop_assert_eq!(parse_records(&serialize_records(&records)).unwrap(), records);
    }
}

#[test]
fn ingest_from_file_with_duplicates() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curves.json");
    std::fs::write(&path, r#"[{"a":"-6","b":"8"},{"a":"-6","b":"8"}]"#).unwrap();
    let r = batch_ingest(&path).unwrap();
    assert_eq!(r.len(), 2);
    assert_eq!(r[0], r[1]);
    assert!(batch_ingest(&dir.path().join("missing.json")).is_err());
}
