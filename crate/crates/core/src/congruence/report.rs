use serde::Serialize;

use crate::elliptic::curve::Curve;
use crate::elliptic::finite_field::{ap_unchecked, cubic_splitting_type, good_primes, PowerTable, SplittingType};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ApPair {
    pub p: u64,
    pub ap_e: i64,
    pub ap_f: i64,
}

/// Trace congruence of two curves at their common good primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub e: Curve,
    pub f: Curve,
    pub n: u32,
    pub primes: Vec<u64>,
    pub all_congruent: bool,
    pub first_failure: Option<u64>,
    /// A good prime with `a_p(E) != a_p(F)`. Absence means isogeny is not excluded.
    pub nonisogeny_witness: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ap_table: Option<Vec<ApPair>>,
}

fn check_bound(bound: u64) -> Result<()> {
    if bound < 20 {
        return Err(Error::InvalidArgument(format!("prime bound {bound} is below 20")));
    }
    Ok(())
}

pub fn ap_mod_n_check(e: &Curve, f: &Curve, n: u32, bound: u64) -> Result<CongruenceReport> {
    ap_mod_n_check_with(e, f, n, bound, false)
}

/// As [`ap_mod_n_check`], optionally keeping the full `a_p` table.
pub fn ap_mod_n_check_with(e: &Curve, f: &Curve, n: u32, bound: u64, table: bool) -> Result<CongruenceReport> {
    if ![2, 3, 6].contains(&n) {
        return Err(Error::InvalidArgument(format!("modulus {n} is not 2, 3 or 6")));
    }
    check_bound(bound)?;
    let primes = good_primes(&[e.clone(), f.clone()], bound);
    let pairs: Vec<ApPair> = primes
        .iter()
        .map(|&p| {
            let sq = PowerTable::squares(p);
            ApPair { p, ap_e: ap_unchecked(e, p, &sq).ap, ap_f: ap_unchecked(f, p, &sq).ap }
        })
        .collect();
    let first_failure = pairs.iter().find(|r| (r.ap_e - r.ap_f).rem_euclid(n as i64) != 0).map(|r| r.p);
    let nonisogeny_witness = pairs.iter().find(|r| r.ap_e != r.ap_f).map(|r| r.p);
    Ok(CongruenceReport {
        e: e.clone(),
        f: f.clone(),
        n,
        primes,
        all_congruent: first_failure.is_none(),
        first_failure,
        nonisogeny_witness,
        ap_table: table.then_some(pairs),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplittingMismatch {
    pub p: u64,
    pub e: SplittingType,
    pub f: SplittingType,
}

/// Factorization types of the 2-division cubics at common good primes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mod2Report {
    pub primes: Vec<u64>,
    pub all_agree: bool,
    pub first_disagreement: Option<SplittingMismatch>,
}

pub fn mod2_type_check(e: &Curve, f: &Curve, bound: u64) -> Result<Mod2Report> {
    check_bound(bound)?;
    let primes = good_primes(&[e.clone(), f.clone()], bound);
    let mut first_disagreement = None;
    for &p in &primes {
        let (te, tf) = (cubic_splitting_type(e, p)?, cubic_splitting_type(f, p)?);
        if te != tf {
            first_disagreement = Some(SplittingMismatch { p, e: te, f: tf });
            break;
        }
    }
    Ok(Mod2Report { primes, all_agree: first_disagreement.is_none(), first_disagreement })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::int;

    fn c(a: i64, b: i64) -> Curve {
        Curve::from_ints(a, b).unwrap()
    }

    #[test]
    fn identical_curves() {
        let r = ap_mod_n_check(&c(-6, 8), &c(-6, 8), 6, 200).unwrap();
        assert!(r.all_congruent && r.nonisogeny_witness.is_none());
    }

    #[test]
    fn headline_pair() {
        let r = ap_mod_n_check(&c(-6, 8), &c(-216, 1728), 6, 1000).unwrap();
        assert!(r.all_congruent);
        assert!(r.nonisogeny_witness.unwrap() <= 100);
        assert_eq!(r.primes.first(), Some(&5));
    }

    #[test]
    fn generic_pair_fails() {
        let r = ap_mod_n_check(&c(-6, 8), &c(1, 1), 6, 200).unwrap();
        assert!(!r.all_congruent);
        assert!(r.first_failure.unwrap() < 50);
    }

    #[test]
    fn table_is_optional_in_json() {
        let r = ap_mod_n_check(&c(-6, 8), &c(-6, 8), 2, 30).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(!s.contains("ap_table"));
        let r = ap_mod_n_check_with(&c(-6, 8), &c(-6, 8), 2, 30, true).unwrap();
        assert_eq!(r.ap_table.unwrap().len(), r.primes.len());
    }

    #[test]
    fn contract_violations() {
        assert!(ap_mod_n_check(&c(-6, 8), &c(-6, 8), 5, 100).is_err());
        assert!(ap_mod_n_check(&c(-6, 8), &c(-6, 8), 6, 10).is_err());
    }

    #[test]
    fn splitting_types() {
        let e = c(-6, 8);
        assert!(mod2_type_check(&e, &e.twist(&int(5)).unwrap(), 200).unwrap().all_agree);
        let r = mod2_type_check(&e, &c(1, 1), 50).unwrap();
        assert!(!r.all_agree && r.first_disagreement.unwrap().p <= 50);
    }
}
