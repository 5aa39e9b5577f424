mod common;

use common::curve;
use congruent6::elliptic::Curve;
use congruent6::exact::{int, Rat};
use congruent6::models::{build_a23, canonical_model, derive_quadrics, jacobian_consistency, quadrics_s, ModelKind};
use num_traits::Zero;
use proptest::prelude::*;

fn jacobian(e: &Curve, kind: ModelKind) -> Curve {
    canonical_model(e, kind).as_quartic().expect("quartic model").jacobian().unwrap()
}

fn b_only(b: Rat) -> Curve {
    Curve::new(Rat::zero(), b).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn quartic_model_jacobians(e in curve()) {
        let d = e.discriminant();
        let (i, j) = canonical_model(&e, ModelKind::CX).as_quartic().unwrap().invariants();
        prop_assert!(i.is_zero());
        prop_assert_eq!(j, d.clone());
        prop_assert!(jacobian(&e, ModelKind::CX).is_q_isomorphic(&b_only(int(-27) * &d)));
        prop_assert!(jacobian(&e, ModelKind::Xminus1).is_q_isomorphic(&b_only(d.recip())));
        prop_assert!(jacobian(&e, ModelKind::CXminus).is_q_isomorphic(&b_only(int(-27) / &d)));
    }

    #[test]
    fn nine_quadrics(e in curve()) {
        prop_assert_eq!(quadrics_s(&e).rank(), 9);
    }

    #[test]
    fn plane_cubic_jacobians_by_counting(e in curve()) {
        prop_assert!(jacobian_consistency(&e, 60).passed());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn derived_quadrics_vanish_on_the_image(e in curve()) {
        let q = derive_quadrics(&e).unwrap();
        prop_assert_eq!(q.rank(), 9);
        prop_assert!(q.vanishes_on(&build_a23(&e), &std::array::from_fn(|_| int(1))));
    }
}
