use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_congruent6"))
        .args(args)
        .env_remove("CONGRUENT6_PRIME_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON on stdout")
}

fn curves_file(body: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(body.as_bytes()).unwrap();
    f
}

#[test]
fn model_prints_equation() {
    let o = run(&["model", "XE6", "-a", "-6", "-b", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "y^2 = x^3 - 13824");
}

#[test]
fn report_shape() {
    let o = run(&["--json", "model", "CX", "-a", "1", "-b", "0"]);
    let doc = json(&o);
    for key in ["command", "inputs", "results", "failures"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert_eq!(doc["command"], "model");
    assert_eq!(doc["results"]["equation"], "y^2 = l^4 + 2*l^2*m^2 - 1/3*m^4");
}

#[test]
fn search_headline_pair() {
    let o = run(&["--json", "search", "--example", "4.9", "--t", "9/2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    let r = &doc["results"]["reports"][0];
    assert_eq!(r["e_label"], "6912v1");
    assert_eq!(r["f_label"], "6912p1");
    assert_eq!(r["j_f"], "-1728");
    assert_eq!(r["report"]["all_congruent"], true);
    assert!(r["report"]["nonisogeny_witness"].as_u64().unwrap() <= 100);
    assert_eq!(doc["inputs"]["bound"], 1000);
}

#[test]
fn search_second_family_skips_singular_parameter() {
    let o = run(&["--json", "--bound", "100", "search", "--example", "4.10", "--uv", "2:1", "--uv", "3:1"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["results"]["reports"].as_array().unwrap().len(), 1);
    assert_eq!(doc["results"]["skipped"][0]["parameter"], "(u : v) = (2 : 1)");
}

#[test]
fn prime_bound_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_congruent6"))
        .args(["--json", "search", "--example", "4.9"])
        .env("CONGRUENT6_PRIME_BOUND", "50")
        .output()
        .unwrap();
    assert_eq!(json(&o)["inputs"]["bound"], 50);
}

#[test]
fn verify_identities_passes() {
    let o = run(&["verify", "identities"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).starts_with("identities (pass)"));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["model", "XE6", "-a", "0", "-b", "0"],
        vec!["model", "XE6", "-a", "1.5", "-b", "0"],
        vec!["model", "W", "-a", "1", "-b", "0"],
        vec!["frobnicate"],
        vec!["search", "--example", "4.11"],
        vec!["map", "cxminus", "-a", "1", "-b", "1", "--point", "1,2"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn indeterminate_map_is_a_failure() {
    let o = run(&["map", "6to3", "-a", "0", "-b", "1", "--point", "12,36"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not defined"));
}

#[test]
fn batch_mod6_and_out_file() {
    let f = curves_file(r#"[{"label":"6912v1","a":"-6","b":"8"},{"label":"6912p1","a":"-216","b":"1728"}]"#);
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = run(&["batch", "--in", f.path().to_str().unwrap(), "--check", "mod6", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).trim(), "ok  : 6912v1 vs 6912p1");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(doc["command"], "batch");
    assert_eq!(doc["results"][0]["passed"], true);
}

#[test]
fn batch_failure_exits_1() {
    let f = curves_file(r#"[{"a":"-6","b":"8"},{"a":"1","b":"1"}]"#);
    let o = run(&["--bound", "100", "batch", "--in", f.path().to_str().unwrap(), "--check", "mod2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL: #0 vs #1"));
}

#[test]
fn batch_jacobians_with_fractions() {
    let f = curves_file(r#"[{"a":"-8/27","b":"64/729"},{"a":"1","b":"0"}]"#);
    let o = run(&["--bound", "60", "batch", "--in", f.path().to_str().unwrap(), "--check", "jacobians"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn batch_rejects_singular_record() {
    let f = curves_file("[\n{\"a\":\"1\",\"b\":\"1\"},\n{\"a\":\"0\",\"b\":\"0\"}\n]");
    let o = run(&["batch", "--in", f.path().to_str().unwrap(), "--check", "jacobians"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("record 1 (line 3)"));
}

#[test]
fn no_floats_in_reports() {
    let o = run(&["--json", "family", "3r", "-a", "-6", "-b", "8", "--param", "1/3:1"]);
    let text = stdout(&o);
    assert!(text.contains("\"-2187/2\""));
    assert!(!text.contains('.'), "{text}");
}
