use std::fmt::Write as _;

use serde_json::json;

use super::config::OutputFormat;
use super::run::RunResult;

/// 17 significant digits, valid as both CSV and JSON; non-finite values
/// become `nan`/`inf` in CSV and `null` in JSON.
fn number(x: f64, json: bool) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else if json {
        "null".to_owned()
    } else {
        format!("{x}").to_lowercase()
    }
}

pub fn to_csv(result: &RunResult) -> String {
    let s = &result.series;
    let mut out = String::from("t");
    for name in &s.names {
        out.push(',');
        out.push_str(name);
    }
    out.push('\n');
    for (i, t) in s.times.iter().enumerate() {
        out.push_str(&number(*t, false));
        for col in &s.columns {
            out.push(',');
            out.push_str(&number(col[i], false));
        }
        out.push('\n');
    }
    out
}

/// The leading JSON-lines object.
pub fn metadata_json(result: &RunResult) -> serde_json::Value {
    json!({
        "metadata": result.metadata,
        "summary": result.summary,
        "events": result.events,
        "observables": result.series.names,
    })
}

pub fn to_jsonl(result: &RunResult) -> String {
    let s = &result.series;
    let mut out = metadata_json(result).to_string();
    out.push('\n');
    let keys: Vec<String> = s
        .names
        .iter()
        .map(|n| serde_json::to_string(n).expect("strings serialize"))
        .collect();
    for (i, t) in s.times.iter().enumerate() {
        write!(out, "{{\"t\":{}", number(*t, true)).unwrap();
        for (key, col) in keys.iter().zip(&s.columns) {
            write!(out, ",{key}:{}", number(col[i], true)).unwrap();
        }
        out.push_str("}\n");
    }
    out
}

pub fn export_series(result: &RunResult, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => to_csv(result),
        OutputFormat::Jsonl => to_jsonl(result),
    }
}

/// Parses a format name and exports; unknown names are rejected.
pub fn export_named(result: &RunResult, format: &str) -> crate::Result<String> {
    Ok(export_series(result, format.parse()?))
}
