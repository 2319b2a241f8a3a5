//! Report envelope and its text rendering.

use serde::Serialize;
use serde_json::Value;
use std::fmt::Write;

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub failures: Vec<Value>,
    pub runtime_ms: u64,
    pub version: String,
}

impl Report {
    /// Pretty JSON with keys in sorted order.
    pub fn to_json(&self) -> String {
        // going through Value sorts every object's keys
        let value = serde_json::to_value(self).expect("report is serializable");
        serde_json::to_string_pretty(&value).expect("value is serializable")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        section(&mut out, "inputs", &self.inputs);
        section(&mut out, "result", &self.result);
        if self.failures.is_empty() {
            writeln!(out, "failures: none").unwrap();
        } else {
            section(&mut out, "failures", &Value::Array(self.failures.clone()));
        }
        writeln!(out, "runtime_ms: {}", self.runtime_ms).unwrap();
        writeln!(out, "version: {}", self.version).unwrap();
        out
    }
}

fn section(out: &mut String, name: &str, value: &Value) {
    if is_inline(value) {
        writeln!(out, "{name}: {}", inline(value)).unwrap();
    } else {
        writeln!(out, "{name}:").unwrap();
        block(out, value, 1);
    }
}

fn is_inline(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(is_scalar),
        Value::Object(map) => map.is_empty(),
        _ => true,
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(inline).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) if map.is_empty() => "{}".into(),
        other => other.to_string(),
    }
}

fn block(out: &mut String, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                if is_inline(v) {
                    writeln!(out, "{pad}{k}: {}", inline(v)).unwrap();
                } else {
                    writeln!(out, "{pad}{k}:").unwrap();
                    block(out, v, depth + 1);
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_inline(item) {
                    writeln!(out, "{pad}- {}", inline(item)).unwrap();
                } else if let Value::Object(map) = item {
                    // "- key: value" for the first field, aligned fields after
                    let mut first = true;
                    for (k, v) in map {
                        let lead = if first {
                            format!("{pad}- ")
                        } else {
                            format!("{pad}  ")
                        };
                        first = false;
                        if is_inline(v) {
                            writeln!(out, "{lead}{k}: {}", inline(v)).unwrap();
                        } else {
                            writeln!(out, "{lead}{k}:").unwrap();
                            block(out, v, depth + 2);
                        }
                    }
                } else {
                    writeln!(out, "{pad}-").unwrap();
                    block(out, item, depth + 1);
                }
            }
        }
        other => writeln!(out, "{pad}{}", inline(other)).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn sample() -> Report {
        Report {
            command: "check slp".into(),
            inputs: json!({"num": "x^3, y^4", "den": "x^5, y^5"}),
            result: json!({"holds": false, "matrix": [[1, 2], [0, 1]], "series": {"start": 2, "coeffs": [1, 2]}}),
            failures: vec![json!({"i": 4, "d": 1, "rank": 2, "expected": 3})],
            runtime_ms: 0,
            version: "0.1.0".into(),
        }
    }

    #[test]
    fn json_keys_are_sorted() {
        let s = sample().to_json();
        let pos = |k: &str| s.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("command") < pos("failures"));
        assert!(pos("failures") < pos("inputs"));
        assert!(pos("inputs") < pos("result"));
        assert!(pos("runtime_ms") < pos("version"));
        assert!(pos("den") < pos("num"));
    }

    #[test]
    fn text_mentions_every_field() {
        let t = sample().to_text();
        for needle in [
            "command: check slp",
            "num: x^3, y^4",
            "holds: false",
            "- d: 1",
            "rank: 2",
            "coeffs: [1, 2]",
            "- [1, 2]",
        ] {
            assert!(t.contains(needle), "missing {needle:?} in\n{t}");
        }
    }
}
