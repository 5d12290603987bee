//! Matrix input and output.
//!
//! Input is either a JSON document `{"rows": r, "cols": c, "data": [[..], ..],
//! "genus": g}` (`genus` optional, entries as numbers or decimal strings) or a
//! bare whitespace-separated grid, one row per line. The report printed by
//! `generate` is also accepted and yields its matrix. Output entries whose
//! magnitude exceeds 2⁵³ are written as decimal strings.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::Deserialize;
use serde_json::Value;

use symcanon::IntMatrix;

use crate::error::CliError;

/// Largest magnitude written as a plain JSON number.
const MAX_SAFE_INTEGER: i64 = 1 << 53;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixDocument {
    pub matrix: IntMatrix,
    pub genus: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Value>>,
    #[serde(default)]
    genus: Option<usize>,
}

fn parse_entry(v: &Value, row: usize, col: usize) -> Result<BigInt, CliError> {
    let bad = || CliError::Parse {
        message: format!("entry ({row}, {col}) is not an integer: {v}"),
        line: None,
        column: None,
    };
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                // Floats cannot carry exact integers beyond 2^53.
                Err(bad())
            }
        }
        Value::String(s) => BigInt::from_str(s.trim()).map_err(|_| bad()),
        _ => Err(bad()),
    }
}

fn parse_json(text: &str) -> Result<MatrixDocument, CliError> {
    let parse_err = |e: serde_json::Error| CliError::Parse {
        message: e.to_string(),
        line: Some(e.line()),
        column: Some(e.column()),
    };
    let mut value: Value = serde_json::from_str(text).map_err(parse_err)?;
    // A `generate` report can be fed straight back in.
    if let Some(m) = value.pointer_mut("/payload/matrix") {
        value = m.take();
    }
    let raw: RawDocument = serde_json::from_value(value).map_err(|e| CliError::Parse {
        message: e.to_string(),
        line: None,
        column: None,
    })?;
    if raw.data.len() != raw.rows {
        return Err(CliError::Input(format!("data has {} rows, expected {}", raw.data.len(), raw.rows)));
    }
    let mut entries = Vec::with_capacity(raw.rows * raw.cols);
    for (i, row) in raw.data.iter().enumerate() {
        if row.len() != raw.cols {
            return Err(CliError::Input(format!("row {i} has {} entries, expected {}", row.len(), raw.cols)));
        }
        for (j, v) in row.iter().enumerate() {
            entries.push(parse_entry(v, i, j)?);
        }
    }
    let matrix = IntMatrix::new(raw.rows, raw.cols, entries).map_err(|e| CliError::Input(e.to_string()))?;
    if let Some(g) = raw.genus {
        if matrix.rows() != 2 * g || matrix.cols() != 2 * g {
            return Err(CliError::Input(format!(
                "genus {g} needs a {0}x{0} matrix, got {1}x{2}",
                2 * g,
                matrix.rows(),
                matrix.cols()
            )));
        }
    }
    Ok(MatrixDocument { matrix, genus: raw.genus })
}

fn parse_grid(text: &str) -> Result<MatrixDocument, CliError> {
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        let mut col = 1;
        for tok in line.split_whitespace() {
            let offset = line[col - 1..].find(tok).map_or(col, |o| col + o);
            let v = BigInt::from_str(tok).map_err(|_| CliError::Parse {
                message: format!("not an integer: {tok:?}"),
                line: Some(ln + 1),
                column: Some(offset),
            })?;
            row.push(v);
            col = offset + tok.len();
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(CliError::Parse {
                    message: format!("row has {} entries, expected {}", row.len(), first.len()),
                    line: Some(ln + 1),
                    column: None,
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(CliError::Parse { message: "empty matrix".into(), line: None, column: None });
    }
    Ok(MatrixDocument { matrix: IntMatrix::from_rows(rows), genus: None })
}

/// Parses either input format; JSON is recognized by a leading `{`.
pub fn parse_matrix(text: &str) -> Result<MatrixDocument, CliError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_grid(text)
    }
}

pub fn entry_value(e: &BigInt) -> Value {
    if e.abs() <= BigInt::from(MAX_SAFE_INTEGER) {
        Value::from(e.to_i64().expect("fits in i64"))
    } else {
        Value::String(e.to_string())
    }
}

pub fn matrix_value(m: &IntMatrix) -> Value {
    let data: Vec<Value> = m
        .to_rows()
        .iter()
        .map(|r| Value::Array(r.iter().map(entry_value).collect()))
        .collect();
    serde_json::json!({ "rows": m.rows(), "cols": m.cols(), "data": data })
}

/// Serializes a matrix as a standalone input document.
pub fn emit_matrix(m: &IntMatrix, genus: Option<usize>) -> String {
    let mut v = matrix_value(m);
    if let Some(g) = genus {
        v["genus"] = Value::from(g);
    }
    serde_json::to_string(&v).expect("serializable")
}
