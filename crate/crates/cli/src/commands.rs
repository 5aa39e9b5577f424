use std::fmt::Write as _;

use congruent6::congruence::{batch_check_by_name, reverse6_pipeline, PipelineParam, PipelineRun};
use congruent6::elliptic::Curve;
use congruent6::exact::rat::fmt_rat;
use congruent6::families::{family_by_name, FamilyPoint};
use congruent6::models::{canonical_model, ModelKind};
use congruent6::morphisms::point_map_by_name;
use congruent6::verify::{suite_by_name, suites, SuiteConfig, SuiteReport};
use congruent6::{Error, Rat};
use serde_json::{json, Value};

use crate::records::batch_ingest;
use crate::{CliError, Command, CurveArgs, Document, Outcome};

fn curve(c: &CurveArgs) -> Result<Curve, CliError> {
    Ok(Curve::new(c.a.clone(), c.b.clone())?)
}

fn fracs(v: &[Rat]) -> Vec<String> {
    v.iter().map(fmt_rat).collect()
}

fn curve_json(e: &Curve) -> Value {
    json!({ "a": fmt_rat(e.a()), "b": fmt_rat(e.b()) })
}

fn outcome(command: &str, inputs: Value, results: Value, failures: Vec<String>, text: String) -> Outcome {
    Outcome { doc: Document { command: command.into(), inputs, results, failures }, text }
}

pub fn dispatch(cmd: &Command, bound: u64) -> Result<Outcome, CliError> {
    match cmd {
        Command::Model { which, curve: c } => model(which, &curve(c)?),
        Command::Family { name, curve: c, param } => family(name, &curve(c)?, param),
        Command::Map { name, curve: c, point } => map(name, &curve(c)?, point),
        Command::Verify { suite, seed } => verify(suite, *seed, bound),
        Command::Search { example, t, uv } => search(example, t, uv, bound),
        Command::Batch { input, check } => batch(input, check, bound),
    }
}

fn model(which: &str, e: &Curve) -> Result<Outcome, CliError> {
    let kind: ModelKind = which.parse()?;
    let text = canonical_model(e, kind).to_text();
    Ok(outcome(
        "model",
        json!({ "model": kind.name(), "curve": curve_json(e) }),
        json!({ "equation": text }),
        vec![],
        text,
    ))
}

fn family(name: &str, e: &Curve, (s, t): &(Rat, Rat)) -> Result<Outcome, CliError> {
    let fam = family_by_name(name)?;
    let pt = FamilyPoint::new(s.clone(), t.clone())?;
    let inputs = json!({ "family": fam.name(), "curve": curve_json(e), "param": fracs(&[s.clone(), t.clone()]) });
    match fam.member(e, &pt) {
        Ok(f) => {
            let text = format!("{}\nj = {}", f.to_text(), fmt_rat(&f.j_invariant()));
            let results = json!({ "curve": curve_json(&f), "equation": f.to_text(), "j": fmt_rat(&f.j_invariant()) });
            Ok(outcome("family", inputs, results, vec![], text))
        }
        Err(err @ Error::DegenerateFiber(_)) => {
            Ok(outcome("family", inputs, Value::Null, vec![err.to_string()], err.to_string()))
        }
        Err(err) => Err(err.into()),
    }
}

fn map(name: &str, e: &Curve, point: &[Rat]) -> Result<Outcome, CliError> {
    let m = point_map_by_name(name)?;
    let inputs = json!({ "map": m.name(), "curve": curve_json(e), "point": fracs(point) });
    match m.apply(e, point) {
        Ok(image) => {
            let text = format!("({})", fracs(&image).join(", "));
            Ok(outcome("map", inputs, json!({ "image": fracs(&image) }), vec![], text))
        }
        Err(err @ (Error::Indeterminate { .. } | Error::DegeneratePoint(_))) => {
            Ok(outcome("map", inputs, Value::Null, vec![err.to_string()], err.to_string()))
        }
        Err(err) => Err(err.into()),
    }
}

fn suite_text(r: &SuiteReport, out: &mut String) {
    let _ = writeln!(out, "{} ({})", r.suite, if r.passed() { "pass" } else { "FAIL" });
    for c in &r.checks {
        let _ = write!(out, "  [{}] {}", if c.passed { "ok" } else { "FAIL" }, c.name);
        if !c.detail.is_empty() {
            let _ = write!(out, ": {}", c.detail);
        }
        out.push('\n');
    }
}

fn verify(name: &str, seed: u64, bound: u64) -> Result<Outcome, CliError> {
    let chosen = if name == "all" { suites() } else { vec![suite_by_name(name)?] };
    // suites run at the property-suite bound unless asked for less
    let cfg = SuiteConfig { seed, bound: bound.min(SuiteConfig::default().bound) };
    let reports: Vec<SuiteReport> = chosen.iter().map(|s| s.run(&cfg)).collect();
    let mut text = String::new();
    let mut failures = Vec::new();
    for r in &reports {
        suite_text(r, &mut text);
        failures.extend(r.checks.iter().filter(|c| !c.passed).map(|c| format!("{}: {}", r.suite, c.name)));
    }
    let inputs = json!({ "suite": name, "seed": seed, "bound": cfg.bound });
    Ok(outcome("verify", inputs, serde_json::to_value(&reports).unwrap(), failures, text.trim_end().into()))
}

fn run_text(run: &PipelineRun) -> String {
    let mut out = String::new();
    for r in &run.reports {
        let label = |l: Option<&str>| l.map(|s| format!("  [{s}]")).unwrap_or_default();
        let _ = writeln!(out, "{}", r.parameter);
        let _ = writeln!(out, "  E: {}{}", r.e.to_text(), label(r.e_label));
        let _ = writeln!(out, "  P: {}", r.point);
        let _ = writeln!(out, "  image on X_E^-(3): ({} : {})", fmt_rat(&r.image[0]), fmt_rat(&r.image[1]));
        let _ = writeln!(out, "  F: {}{}", r.f.to_text(), label(r.f_label));
        let _ = writeln!(out, "  j(F) = {}", fmt_rat(&r.j_f));
        let rep = &r.report;
        let _ = writeln!(out, "  a_p congruent mod 6 at {} good primes: {}", rep.primes.len(), rep.all_congruent);
        match rep.nonisogeny_witness {
            Some(p) => {
                let _ = writeln!(out, "  not isogenous: a_p differ at p = {p}");
            }
            None => {
                let _ = writeln!(out, "  isogeny not excluded");
            }
        }
    }
    for s in &run.skipped {
        let _ = writeln!(out, "{}: skipped ({})", s.parameter, s.reason);
    }
    out.trim_end().into()
}

fn search(example: &str, t: &[Rat], uv: &[(Rat, Rat)], bound: u64) -> Result<Outcome, CliError> {
    let params: Vec<PipelineParam> = match example {
        "4.9" => {
            if !uv.is_empty() {
                return Err(CliError::Usage("--uv belongs to --example 4.10".into()));
            }
            let t = if t.is_empty() { vec![Rat::new(9.into(), 2.into())] } else { t.to_vec() };
            t.into_iter().map(PipelineParam::T).collect()
        }
        "4.10" => {
            if !t.is_empty() {
                return Err(CliError::Usage("--t belongs to --example 4.9".into()));
            }
            let uv = if uv.is_empty() {
                vec![(Rat::from_integer(3.into()), Rat::from_integer(1.into()))]
            } else {
                uv.to_vec()
            };
            uv.into_iter().map(|(u, v)| PipelineParam::UV(u, v)).collect()
        }
        other => return Err(CliError::Usage(format!("unknown example `{other}` (known: 4.9, 4.10)"))),
    };
    if bound < 20 {
        return Err(CliError::Usage(format!("prime bound {bound} is below 20")));
    }
    let inputs = json!({ "example": example, "params": params.iter().map(|p| p.to_string()).collect::<Vec<_>>(), "bound": bound });
    let run = reverse6_pipeline(params, bound);
    let mut failures: Vec<String> = run
        .reports
        .iter()
        .filter(|r| !r.report.all_congruent)
        .map(|r| format!("{}: a_p not congruent mod 6 at p = {}", r.parameter, r.report.first_failure.unwrap()))
        .collect();
    if run.reports.is_empty() {
        failures.push("every parameter was degenerate".into());
    }
    let text = run_text(&run);
    Ok(outcome("search", inputs, serde_json::to_value(&run).unwrap(), failures, text))
}

fn batch(path: &std::path::Path, check: &str, bound: u64) -> Result<Outcome, CliError> {
    let chk = batch_check_by_name(check)?;
    let records = batch_ingest(path)?;
    let curves: Vec<Curve> = records.iter().map(|r| r.curve.clone()).collect();
    let rows = chk.run(&curves, bound)?;
    let names = |idx: &[usize]| idx.iter().map(|&i| records[i].name(i)).collect::<Vec<_>>();
    let mut text = String::new();
    let mut failures = Vec::new();
    let mut results = Vec::new();
    for row in &rows {
        let who = names(&row.subjects).join(" vs ");
        let _ = writeln!(text, "{}: {who}", if row.passed { "ok  " } else { "FAIL" });
        if !row.passed {
            failures.push(format!("{check}: {who}"));
        }
        results.push(json!({ "subjects": names(&row.subjects), "passed": row.passed, "detail": row.detail }));
    }
    let inputs = json!({
        "file": path.display().to_string(),
        "check": chk.name(),
        "bound": bound,
        "curves": records.iter().enumerate().map(|(i, r)| json!({ "label": r.name(i), "a": fmt_rat(r.curve.a()), "b": fmt_rat(r.curve.b()) })).collect::<Vec<_>>(),
    });
    Ok(outcome("batch", inputs, Value::Array(results), failures, text.trim_end().into()))
}
