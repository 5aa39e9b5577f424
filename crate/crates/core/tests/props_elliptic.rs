mod common;

use common::{curve, nonzero_rat};
use congruent6::elliptic::finite_field::{legendre_rat, primes_up_to};
use congruent6::elliptic::{ap, Curve, Quartic};
use congruent6::exact::{int, Rat};
use proptest::prelude::*;

fn quartic_with_point() -> impl Strategy<Value = Quartic> {
    (1i64..=6, proptest::array::uniform4(-9i64..=9))
        .prop_filter_map("repeated root", |(k, [c3, c2, c1, c0])| Quartic::from_ints([k * k, c3, c2, c1, c0]).ok())
}

fn unit_square() -> impl Strategy<Value = Rat> {
    nonzero_rat().prop_map(|u| &u * &u)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn hasse_bound(e in curve()) {
        for p in primes_up_to(200) {
            if let Ok(r) = ap(&e, p) {
                prop_assert!(r.ap * r.ap <= 4 * p as i64, "p = {} ap = {}", p, r.ap);
                prop_assert_eq!(r.count as i64, p as i64 + 1 - r.ap);
            }
        }
    }

    #[test]
    fn twist_multiplies_traces_by_a_character(e in curve(), d in nonzero_rat()) {
        let t = e.twist(&d).unwrap();
        for p in primes_up_to(150) {
            let (Ok(r), Ok(rt), Some(chi)) = (ap(&e, p), ap(&t, p), legendre_rat(&d, p)) else { continue };
            prop_assert_eq!(rt.ap, chi * r.ap, "p = {}", p);
        }
    }

    #[test]
    fn invariant_scaling(q in quartic_with_point(), c in nonzero_rat()) {
        let (i, j) = q.invariants();
        let (ic, jc) = q.scale(&c).invariants();
        prop_assert_eq!(ic, &c * &c * i);
        prop_assert_eq!(jc, &c * &c * &c * j);
    }

    #[test]
    fn quartic_counts_match_jacobian(q in quartic_with_point()) {
        let jac = q.jacobian().unwrap();
        for p in primes_up_to(100).into_iter().filter(|&p| p >= 5) {
            let Ok(r) = ap(&jac, p) else { continue };
            prop_assert_eq!(q.point_count(p), Some(r.count), "p = {} for {}", p, q.to_text());
        }
    }

    #[test]
    fn q_isomorphism_is_an_equivalence(e in curve(), f in curve(), u in unit_square(), w in unit_square()) {
        let e2 = e.twist(&u).unwrap();
        let e3 = e2.twist(&w).unwrap();
        prop_assert!(e.is_q_isomorphic(&e));
        prop_assert!(e.is_q_isomorphic(&e2) && e2.is_q_isomorphic(&e));
        prop_assert!(e2.is_q_isomorphic(&e3) && e.is_q_isomorphic(&e3));
        prop_assert_eq!(e.is_q_isomorphic(&f), f.is_q_isomorphic(&e));
        if e.is_q_isomorphic(&f) {
            prop_assert_eq!(e.j_invariant(), f.j_invariant());
            prop_assert!(f.is_q_isomorphic(&e3));
        }
    }
}

#[test]
fn nonsquare_twist_is_not_isomorphic() {
    let e = Curve::from_ints(-6, 8).unwrap();
    assert!(!e.is_q_isomorphic(&e.twist(&int(5)).unwrap()));
}
