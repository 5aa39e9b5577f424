//! Named checks over a list of curves, for batch runs.

use serde::Serialize;
use serde_json::{json, Value};

use super::report::{ap_mod_n_check, mod2_type_check};
use crate::elliptic::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::rat::int;
use crate::models::{canonical_model, jacobian_consistency, JacobianConsistency, ModelKind};

/// Jacobians of the quartic models compared with their expected Weierstrass
/// forms, and the plane-cubic count oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobianReport {
    /// `Jac(C_X) = y^2 = x^3 - 27D`.
    pub c_x: bool,
    /// `Jac(C_{X^-}) ~ y^2 = x^3 - 27/D`.
    pub c_x_minus: bool,
    /// `Jac(X^-_1) ~ y^2 = x^3 + 1/D`.
    pub x_minus1: bool,
    pub counts: JacobianConsistency,
}

impl JacobianReport {
    pub fn passed(&self) -> bool {
        self.c_x && self.c_x_minus && self.x_minus1 && self.counts.passed()
    }
}

fn quartic_jacobian_matches(e: &Curve, kind: ModelKind, want: &Curve) -> bool {
    let q = canonical_model(e, kind);
    q.as_quartic().and_then(|q| q.jacobian().ok()).is_some_and(|j| j.is_q_isomorphic(want))
}

pub fn jacobian_report(e: &Curve, count_bound: u64) -> JacobianReport {
    let d = e.discriminant();
    let w = |b| Curve::new(int(0), b).expect("D != 0");
    JacobianReport {
        c_x: quartic_jacobian_matches(e, ModelKind::CX, &w(int(-27) * &d)),
        c_x_minus: quartic_jacobian_matches(e, ModelKind::CXminus, &w(int(-27) / &d)),
        x_minus1: quartic_jacobian_matches(e, ModelKind::Xminus1, &w(d.recip())),
        counts: jacobian_consistency(e, count_bound),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRow {
    /// Positions of the curves involved, in input order.
    pub subjects: Vec<usize>,
    pub passed: bool,
    pub detail: Value,
}

/// A check run over a list of curves. Pairwise checks compare every curve
/// with the first one.
pub trait BatchCheck: Send + Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn run(&self, curves: &[Curve], bound: u64) -> Result<Vec<CheckRow>>;
}

fn against_first<F>(curves: &[Curve], mut f: F) -> Result<Vec<CheckRow>>
where
    F: FnMut(&Curve, &Curve) -> Result<(bool, Value)>,
{
    let Some((first, rest)) = curves.split_first() else {
        return Err(Error::InvalidArgument("no curves to compare".into()));
    };
    if rest.is_empty() {
        return Err(Error::InvalidArgument("pairwise check needs at least two curves".into()));
    }
    rest.iter()
        .enumerate()
        .map(|(i, c)| {
            let (passed, detail) = f(first, c)?;
            Ok(CheckRow { subjects: vec![0, i + 1], passed, detail })
        })
        .collect()
}

struct Mod6;
struct Mod2;
struct Jacobians;

impl BatchCheck for Mod6 {
    fn name(&self) -> &'static str {
        "mod6"
    }
    fn describe(&self) -> &'static str {
        "a_p congruent mod 6 to the first curve at common good primes"
    }
    fn run(&self, curves: &[Curve], bound: u64) -> Result<Vec<CheckRow>> {
        against_first(curves, |e, f| {
            let r = ap_mod_n_check(e, f, 6, bound)?;
            Ok((r.all_congruent, serde_json::to_value(&r).expect("serializable")))
        })
    }
}

impl BatchCheck for Mod2 {
    fn name(&self) -> &'static str {
        "mod2"
    }
    fn describe(&self) -> &'static str {
        "a_p mod 2 and 2-division splitting types agree with the first curve"
    }
    fn run(&self, curves: &[Curve], bound: u64) -> Result<Vec<CheckRow>> {
        against_first(curves, |e, f| {
            let traces = ap_mod_n_check(e, f, 2, bound)?;
            let types = mod2_type_check(e, f, bound)?;
            let passed = traces.all_congruent && types.all_agree;
            Ok((passed, json!({ "traces": traces, "splitting": types })))
        })
    }
}

impl BatchCheck for Jacobians {
    fn name(&self) -> &'static str {
        "jacobians"
    }
    fn describe(&self) -> &'static str {
        "Jacobians of C_X, C_X^-, X^-_1 and point counts of C_Y, C_Y^- for each curve"
    }
    fn run(&self, curves: &[Curve], bound: u64) -> Result<Vec<CheckRow>> {
        Ok(curves
            .iter()
            .enumerate()
            .map(|(i, e)| {
                let r = jacobian_report(e, bound);
                CheckRow {
                    subjects: vec![i],
                    passed: r.passed(),
                    detail: serde_json::to_value(&r).expect("serializable"),
                }
            })
            .collect())
    }
}

pub fn batch_checks() -> Vec<Box<dyn BatchCheck>> {
    vec![Box::new(Mod6), Box::new(Mod2), Box::new(Jacobians)]
}

pub fn batch_check_by_name(name: &str) -> Result<Box<dyn BatchCheck>> {
    let all = batch_checks();
    let known = all.iter().map(|c| c.name()).collect::<Vec<_>>().join(", ");
    all.into_iter().find(|c| c.name() == name).ok_or(Error::UnknownName {
        kind: "check",
        name: name.to_string(),
        known,
    })
}
