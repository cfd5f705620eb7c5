//! Aligned plain-text rendering of JSON reports.

use std::fmt::Write;

use serde_json::Value;

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Array(items) if items.is_empty() => Some("-".to_string()),
        Value::Array(items) if items.iter().all(is_scalar) => {
            Some(items.iter().map(scalar).collect::<Vec<_>>().join(", "))
        }
        v if is_scalar(v) => Some(scalar(v)),
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            let width = map.keys().map(|k| k.chars().count()).max().unwrap_or(0);
            for (k, item) in map {
                match inline(item) {
                    Some(text) => {
                        let _ = writeln!(out, "{pad}{k:<width$}  {text}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_into(out, item, indent + 2);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                match inline(item) {
                    Some(text) => {
                        let _ = writeln!(out, "{pad}[{i}] {text}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}[{i}]");
                        render_into(out, item, indent + 2);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}

/// Renders a `{"tool", "verdict", "details"}` report, header first.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "tool     {}", scalar(&report["tool"]));
    let _ = writeln!(out, "verdict  {}", scalar(&report["verdict"]));
    let _ = writeln!(out, "details:");
    render_into(&mut out, &report["details"], 2);
    out
}
