use std::fmt::Write as _;

use serde_json::Value;
use symrank::bounds::BoundReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
    Csv,
}

/// Text form derived from the JSON value: one `path: value` line per leaf.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    walk(v, "", &mut out);
    out
}

fn walk(v: &Value, path: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            if map.is_empty() {
                let _ = writeln!(out, "{path}: {{}}");
            }
            for (k, child) in map {
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                walk(child, &p, out);
            }
        }
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            let _ = writeln!(out, "{path}: [{}]", parts.join(", "));
        }
        Value::Array(items) => {
            for (i, child) in items.iter().enumerate() {
                walk(child, &format!("{path}[{i}]"), out);
            }
        }
        other => {
            let _ = writeln!(out, "{path}: {}", scalar(other));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub const CSV_HEADER: [&str; 12] = [
    "p",
    "n",
    "field",
    "method",
    "value_real",
    "value_int",
    "valid",
    "policy",
    "l_k",
    "l_k1",
    "genus",
    "caveats",
];

pub fn to_csv(rows: &[BoundReport]) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(CSV_HEADER)?;
    for r in rows {
        let (l_k, l_k1, genus) = match &r.witnesses {
            Some(w) => (w.l_k.to_string(), w.l_k1.to_string(), w.genus.to_string()),
            None => (String::new(), String::new(), String::new()),
        };
        let value_real = serde_json::to_string(&r.value_real).expect("finite float");
        w.write_record([
            r.p.to_string(),
            r.n.to_string(),
            r.field.to_string(),
            r.method.to_string(),
            value_real,
            r.value_int.to_string(),
            r.valid_unconditional.to_string(),
            r.policy.as_ref().map_or(String::new(), |p| p.name.to_string()),
            l_k,
            l_k1,
            genus,
            r.caveats.join("; "),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
