//! CSV and JSON writers.
//!
//! CSV floats use 17 significant digits (`{:.16e}`), which round-trips any
//! double; JSON uses serde_json's shortest round-trip form. Both are
//! deterministic for identical inputs.

use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;

use crate::AppError;

/// Round-trippable CSV rendering of a double.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// A table with named columns; `None` cells are written empty in CSV and
/// `null` in JSON.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(String),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => fmt_f64(*x),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

impl Table {
    pub fn new(columns: &[&str]) -> Self {
        Table { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }

    pub fn to_csv(&self) -> Result<Vec<u8>, AppError> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
        w.write_record(&self.columns).map_err(|e| AppError::Io(e.to_string()))?;
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv)).map_err(|e| AppError::Io(e.to_string()))?;
        }
        w.into_inner().map_err(|e| AppError::Io(e.to_string()))
    }

    /// Rows as JSON objects keyed by column name (keys sorted; the column
    /// order is given by `columns`).
    pub fn json_rows(&self) -> Vec<serde_json::Value> {
        self.rows
            .iter()
            .map(|row| {
                let mut obj = serde_json::Map::new();
                for (c, v) in self.columns.iter().zip(row) {
                    obj.insert(c.clone(), serde_json::to_value(v).unwrap_or(serde_json::Value::Null));
                }
                serde_json::Value::Object(obj)
            })
            .collect()
    }
}

/// Serializes a value as pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>, AppError> {
    let mut out = serde_json::to_vec_pretty(value).map_err(|e| AppError::Io(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

/// Writes to the file, or to stdout when no path is given.
pub fn emit(bytes: &[u8], path: Option<&Path>) -> Result<(), AppError> {
    match path {
        Some(p) => fs::write(p, bytes).map_err(|e| AppError::Io(format!("{}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes).and_then(|_| out.flush()).map_err(|e| AppError::Io(e.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_floats_round_trip() {
        for x in [0.1, -101.0, 1.0 / 3.0, 6.02214076e23, -2.5e-300] {
            assert_eq!(fmt_f64(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn header_only_table() {
        let t = Table::new(&["n_r", "E"]);
        assert_eq!(t.to_csv().unwrap(), b"n_r,E\n");
    }
}
