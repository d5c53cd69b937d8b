use serde_json::{json, Value};

use crate::{CliError, Outcome, OutputFormat, SCHEMA};

fn document(o: &Outcome) -> Value {
    let mut doc = json!({
        "schema": SCHEMA,
        "config": o.config,
        "result": o.result,
    });
    if let Some(pass) = o.pass {
        doc["status"] = Value::from(if pass { "pass" } else { "fail" });
    }
    doc
}

/// `(dotted key, scalar)` pairs of a JSON value in key order.
pub(crate) fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), parts.join(",")));
        }
        other => out.push((prefix.to_string(), scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "null".into(),
        other => other.to_string(),
    }
}

pub(crate) fn render(o: &Outcome) -> Result<String, CliError> {
    match o.config.output {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&document(o)).map_err(|e| CliError::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        OutputFormat::Text => {
            let mut pairs = Vec::new();
            flatten("", &document(o), &mut pairs);
            Ok(pairs.into_iter().map(|(k, v)| format!("{k}: {v}\n")).collect())
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let (header, rows) = &o.table;
            w.write_record(header).map_err(|e| CliError::Io(e.to_string()))?;
            for r in rows {
                w.write_record(r).map_err(|e| CliError::Io(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Io(e.to_string()))
        }
    }
}

/// Two-column table of the flattened result.
pub(crate) fn key_value_table(result: &Value) -> (Vec<String>, Vec<Vec<String>>) {
    let mut pairs = Vec::new();
    flatten("", result, &mut pairs);
    (vec!["quantity".into(), "value".into()], pairs.into_iter().map(|(k, v)| vec![k, v]).collect())
}
