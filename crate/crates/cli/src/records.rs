//! Curve lists on disk: a JSON array of `{"label"?, "a", "b"}` with exact
//! fraction strings.

use std::fs;
use std::path::Path;

use congruent6::elliptic::Curve;
use congruent6::exact::rat::fmt_rat;
use congruent6::parse_rat;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRecord {
    pub label: Option<String>,
    pub curve: Curve,
}

impl CurveRecord {
    pub fn name(&self, index: usize) -> String {
        self.label.clone().unwrap_or_else(|| format!("#{index}"))
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    a: String,
    b: String,
}

/// Line of the opening brace of each top-level object in a JSON array.
fn object_lines(text: &str) -> Vec<usize> {
    let (mut line, mut depth, mut in_str, mut escaped) = (1, 0, false, false);
    let mut out = Vec::new();
    for ch in text.chars() {
        if in_str {
            match (escaped, ch) {
                (true, _) => escaped = false,
                (false, '\\') => escaped = true,
                (false, '"') => in_str = false,
                _ => {}
            }
        } else {
            match ch {
                '"' => in_str = true,
                '{' | '[' => {
                    if ch == '{' && depth == 1 {
                        out.push(line);
                    }
                    depth += 1;
                }
                '}' | ']' => depth -= 1,
                _ => {}
            }
        }
        if ch == '\n' {
            line += 1;
        }
    }
    out
}

pub fn parse_records(text: &str) -> Result<Vec<CurveRecord>, CliError> {
    let raw: Vec<RawRecord> = serde_json::from_str(text)
        .map_err(|e| CliError::Usage(format!("curve list, line {} column {}: {e}", e.line(), e.column())))?;
    let lines = object_lines(text);
    let mut out = Vec::with_capacity(raw.len());
    let mut problems = Vec::new();
    for (i, r) in raw.into_iter().enumerate() {
        let at = format!("record {} (line {})", i, lines.get(i).copied().unwrap_or(0));
        let parsed = parse_rat(&r.a)
            .map_err(|e| format!("{at}: a: {e}"))
            .and_then(|a| parse_rat(&r.b).map(|b| (a, b)).map_err(|e| format!("{at}: b: {e}")))
            .and_then(|(a, b)| Curve::new(a, b).map_err(|e| format!("{at}: {e}")));
        match parsed {
            Ok(curve) => out.push(CurveRecord { label: r.label, curve }),
            Err(msg) => problems.push(msg),
        }
    }
    if !problems.is_empty() {
        return Err(CliError::Usage(problems.join("\n")));
    }
    Ok(out)
}

pub fn batch_ingest(path: &Path) -> Result<Vec<CurveRecord>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    parse_records(&text)
}

pub fn serialize_records(records: &[CurveRecord]) -> String {
    let raw: Vec<RawRecord> = records
        .iter()
        .map(|r| RawRecord { label: r.label.clone(), a: fmt_rat(r.curve.a()), b: fmt_rat(r.curve.b()) })
        .collect();
    serde_json::to_string_pretty(&raw).expect("plain strings")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_labelled_record() {
        let r = parse_records(r#"[{"label":"6912v1","a":"-6","b":"8"}]"#).unwrap();
        assert_eq!(r.len(), 1);
        assert_eq!(r[0].label.as_deref(), Some("6912v1"));
        assert_eq!(r[0].curve, Curve::from_ints(-6, 8).unwrap());
    }

    #[test]
    fn singular_record_names_its_line() {
        let text = "[\n  {\"a\": \"1\", \"b\": \"1\"},\n  {\"a\": \"0\", \"b\": \"0\"}\n]";
        let CliError::Usage(msg) = parse_records(text).unwrap_err() else { panic!() };
        assert!(msg.contains("record 1 (line 3)"), "{msg}");
        assert!(msg.contains("singular"), "{msg}");
    }

    #[test]
    fn fractions_are_exact() {
        let r = parse_records(r#"[{"a":"-8/27","b":"64/729"}]"#).unwrap();
        assert_eq!(serialize_records(&r).replace([' ', '\n'], ""), r#"[{"a":"-8/27","b":"64/729"}]"#);
    }

    #[test]
    fn malformed_input() {
        assert!(parse_records(r#"[{"a":"1.5","b":"1"}]"#).is_err());
        assert!(parse_records(r#"[{"a":"1","b":"1","c":"2"}]"#).is_err());
        let CliError::Usage(msg) = parse_records("[{\"a\": \"1\",\n \"b\": }]").unwrap_err() else { panic!() };
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn braces_inside_labels_are_ignored() {
        assert_eq!(
            object_lines("[{\"label\":\"{x\",\"a\":\"1\",\"b\":\"1\"},\n{\"a\":\"1\",\"b\":\"2\"}]"),
            vec![1, 2]
        );
    }
}
