mod common;

use common::{curve, nonzero_rat, pair};
use congruent6::congruence::{example410_point, example49_point};
use congruent6::elliptic::Curve;
use congruent6::exact::int;
use congruent6::models::{canonical_model, ModelKind, ProjPoint6};
use congruent6::morphisms::points::on_c_y_minus;
use congruent6::morphisms::{
    iso_g, isogeny_f, j_compatibility, map6to3_reverse, map_to_cxminus, minors_chi2, plane_triple, point_map_by_name,
    BirationalModel,
};
use proptest::prelude::*;

fn sample() -> impl Strategy<Value = (Curve, ProjPoint6)> {
    prop_oneof![
        nonzero_rat().prop_map(|t| example49_point(&t).unwrap()),
        pair(9).prop_filter_map("degenerate parameter", |(u, v)| example410_point(&u, &v).ok()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn specialised_maps_are_certified(e in curve()) {
        prop_assert!(isogeny_f(&e).is_certified());
        prop_assert!(iso_g(&e).is_certified());
    }

    #[test]
    fn reverse_map_factors_through_cxminus((_e, p) in sample()) {
        let (l, m) = map6to3_reverse(&p).unwrap();
        match map_to_cxminus(&p) {
            Ok((x, _)) => prop_assert_eq!(&l, &(x * p.x(6) / int(3))),
            Err(_) => prop_assert_eq!(m, int(0)),
        }
    }

    #[test]
    fn images_land_on_their_targets((e, p) in sample()) {
        let uvy = minors_chi2(&p).unwrap();
        prop_assert!(on_c_y_minus(&e, &uvy));
        if let Ok((l, y)) = map_to_cxminus(&p) {
            let q = canonical_model(&e, ModelKind::CXminus);
            prop_assert_eq!(&y * &y, q.as_quartic().unwrap().eval(&l, &int(1)));
            prop_assert!(BirationalModel::new(&e).contains(&plane_triple(&p).unwrap()));
        }
    }

    #[test]
    fn j_invariants_agree((e, p) in sample()) {
        if let Ok(j) = j_compatibility(&e, &p) {
            prop_assert!(j.agrees(), "{:?}", j);
        }
    }

    #[test]
    fn registry_agrees_with_free_functions((e, p) in sample()) {
        let minors = point_map_by_name("minors").unwrap().apply(&e, p.coords()).unwrap();
        prop_assert_eq!(minors, minors_chi2(&p).unwrap().to_vec());
    }
}
