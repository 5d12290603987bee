//! The report envelope and its two renderings.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Txt,
}

#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub outcome: Result<Value, CliError>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match &self.outcome {
            Ok(_) => crate::error::EXIT_OK,
            Err(e) => e.exit_code(),
        }
    }

    pub fn to_value(&self) -> Value {
        match &self.outcome {
            Ok(payload) => json!({ "command": self.command, "status": "ok", "payload": payload }),
            Err(e) => json!({ "command": self.command, "status": "error", "error": e.to_value() }),
        }
    }

    pub fn render(&self, format: Format) -> String {
        let v = self.to_value();
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&v).expect("serializable");
                s.push('\n');
                s
            }
            Format::Txt => {
                let mut out = String::new();
                render_txt(&mut out, &v, 0);
                out
            }
        }
    }
}

fn as_matrix(v: &Value) -> Option<&Vec<Value>> {
    let obj = v.as_object()?;
    if obj.len() == 3 && obj.contains_key("rows") && obj.contains_key("cols") {
        obj.get("data")?.as_array()
    } else {
        None
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn render_grid(out: &mut String, rows: &[Value], indent: usize) {
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.as_array().map(|r| r.iter().map(scalar).collect()).unwrap_or_default())
        .collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in &cells {
        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "{:indent$}[ {} ]", "", line.join(" "));
    }
}

fn render_map(out: &mut String, map: &Map<String, Value>, indent: usize) {
    for (k, v) in map {
        if let Some(rows) = as_matrix(v) {
            let _ = writeln!(out, "{:indent$}{k}:", "");
            render_grid(out, rows, indent + 2);
        } else if v.is_object() || v.is_array() {
            let _ = writeln!(out, "{:indent$}{k}:", "");
            render_txt(out, v, indent + 2);
        } else {
            let _ = writeln!(out, "{:indent$}{k}: {}", "", scalar(v));
        }
    }
}

fn render_txt(out: &mut String, v: &Value, indent: usize) {
    match v {
        Value::Object(map) => match as_matrix(v) {
            Some(rows) => render_grid(out, rows, indent),
            None => render_map(out, map, indent),
        },
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            let line: Vec<String> = items.iter().map(scalar).collect();
            let _ = writeln!(out, "{:indent$}{}", "", line.join(" "));
        }
        Value::Array(items) => {
            for (i, item) in items.iter().enumerate() {
                let _ = writeln!(out, "{:indent$}[{i}]", "");
                render_txt(out, item, indent + 2);
            }
        }
        other => {
            let _ = writeln!(out, "{:indent$}{}", "", scalar(other));
        }
    }
}
