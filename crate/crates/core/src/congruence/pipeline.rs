//! From a parameter to a reverse 6-congruent pair `(E, F)` and its trace report.

use std::fmt;

use serde::{Serialize, Serializer};

use super::examples::{example410_point, example49_point};
use super::report::{ap_mod_n_check, CongruenceReport};
use crate::elliptic::curve::Curve;
use crate::error::{Error, Result};
use crate::exact::rat::{fmt_rat, serde_rat, Rat};
use crate::families::{family3, Variant};
use crate::models::{quadrics_s, ProjPoint6};
use crate::morphisms::map6to3_reverse;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PipelineParam {
    /// `E = (-8t^2/27, 64t^3/729)`.
    T(Rat),
    /// `E = (t, t)` with `t = t(u : v)`.
    UV(Rat, Rat),
}

impl fmt::Display for PipelineParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PipelineParam::T(t) => write!(f, "t = {}", fmt_rat(t)),
            PipelineParam::UV(u, v) => write!(f, "(u : v) = ({} : {})", fmt_rat(u), fmt_rat(v)),
        }
    }
}

impl Serialize for PipelineParam {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Labels of curves with a name elsewhere, matched up to Q-isomorphism.
const KNOWN: [(&str, i64, i64); 2] = [("6912v1", -6, 8), ("6912p1", -216, 1728)];

pub fn known_label(e: &Curve) -> Option<&'static str> {
    KNOWN.iter().find(|(_, a, b)| Curve::from_ints(*a, *b).unwrap().is_q_isomorphic(e)).map(|k| k.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub parameter: PipelineParam,
    pub e: Curve,
    pub point: ProjPoint6,
    /// Image `(l : m)` on `X_E^-(3)`.
    #[serde(with = "crate::exact::rat::serde_rat_vec")]
    pub image: Vec<Rat>,
    pub f: Curve,
    #[serde(with = "serde_rat")]
    pub j_f: Rat,
    pub e_label: Option<&'static str>,
    pub f_label: Option<&'static str>,
    pub report: CongruenceReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub parameter: PipelineParam,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PipelineRun {
    pub reports: Vec<PipelineReport>,
    pub skipped: Vec<Skipped>,
}

impl PipelineRun {
    pub fn all_congruent(&self) -> bool {
        self.reports.iter().all(|r| r.report.all_congruent)
    }
}

/// `E` and a point of `X_E^-(6)`, checked against the nine quadrics.
pub fn pipeline_point(param: &PipelineParam) -> Result<(Curve, ProjPoint6)> {
    let (e, p) = match param {
        PipelineParam::T(t) => example49_point(t)?,
        PipelineParam::UV(u, v) => example410_point(u, v)?,
    };
    if !quadrics_s(&e).vanishes_at(&p) {
        return Err(Error::DegeneratePoint(format!("{p} is not on X_E^-(6)")));
    }
    Ok((e, p))
}

pub fn run_one(param: &PipelineParam, bound: u64) -> Result<PipelineReport> {
    let (e, point) = pipeline_point(param)?;
    let (l, m) = map6to3_reverse(&point)?;
    let f = family3(&e, &l, &m, Variant::Reverse)?;
    let report = ap_mod_n_check(&e, &f, 6, bound)?;
    Ok(PipelineReport {
        parameter: param.clone(),
        j_f: f.j_invariant(),
        e_label: known_label(&e),
        f_label: known_label(&f),
        e,
        point,
        image: vec![l, m],
        f,
        report,
    })
}

/// Runs every parameter; degenerate ones are skipped with the reason.
pub fn reverse6_pipeline(params: impl IntoIterator<Item = PipelineParam>, bound: u64) -> PipelineRun {
    let mut run = PipelineRun { reports: Vec::new(), skipped: Vec::new() };
    for param in params {
        match run_one(&param, bound) {
            Ok(r) => run.reports.push(r),
            Err(err) => run.skipped.push(Skipped { parameter: param, reason: err.to_string() }),
        }
    }
    run
}
