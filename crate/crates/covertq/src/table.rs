//! Deterministic result tables rendered as CSV or JSON.
//!
//! CSV output is a header line followed by data rows: comma separators,
//! `.` decimal point, LF line endings, UTF-8, no quoting (cells never
//! contain separators). JSON output is a single document
//! `{"schema": [...], "params": {...}, "rows": [[...], ...]}` with key
//! order preserved. Floats are rendered with nine significant digits;
//! missing values render as `nan` in CSV and `null` in JSON. Identical
//! tables always render to identical bytes.

use serde_json::{Map, Number, Value};

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Nonnegative integer (counts, flags, channel uses).
    Int(u64),
    Float(f64),
    Str(String),
    /// Missing value: `nan` in CSV, `null` in JSON.
    Null,
}

/// A rectangular table: named columns, echoed run parameters, data rows.
#[derive(Debug, Clone)]
pub struct Table {
    schema: Vec<String>,
    params: Vec<(String, Cell)>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: AsRef<str>>(schema: &[S]) -> Self {
        Self {
            schema: schema.iter().map(|s| s.as_ref().to_string()).collect(),
            params: Vec::new(),
            rows: Vec::new(),
        }
    }

    /// Records a resolved input parameter, echoed into the JSON `params`
    /// object in insertion order. CSV output carries data rows only.
    pub fn param(&mut self, key: &str, value: Cell) {
        self.params.push((key.to_string(), value));
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.schema.len(),
            "row width must match the schema"
        );
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&self.schema.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(cell_csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut root = Map::new();
        root.insert(
            "schema".to_string(),
            Value::Array(
                self.schema
                    .iter()
                    .map(|s| Value::String(s.clone()))
                    .collect(),
            ),
        );
        let mut params = Map::new();
        for (key, value) in &self.params {
            params.insert(key.clone(), cell_json(value));
        }
        root.insert("params".to_string(), Value::Object(params));
        root.insert(
            "rows".to_string(),
            Value::Array(
                self.rows
                    .iter()
                    .map(|row| Value::Array(row.iter().map(cell_json).collect()))
                    .collect(),
            ),
        );
        let mut out =
            serde_json::to_string(&Value::Object(root)).expect("table serialization cannot fail");
        out.push('\n');
        out
    }
}

fn cell_csv(cell: &Cell) -> String {
    match cell {
        Cell::Int(v) => v.to_string(),
        Cell::Float(x) => fmt_sig9(*x),
        Cell::Str(s) => {
            debug_assert!(
                !s.contains(',') && !s.contains('\n'),
                "string cells must not contain separators"
            );
            s.clone()
        }
        Cell::Null => "nan".to_string(),
    }
}

fn cell_json(cell: &Cell) -> Value {
    match cell {
        Cell::Int(v) => Value::Number((*v).into()),
        Cell::Float(x) if x.is_finite() => {
            let rounded: f64 = fmt_sig9(*x).parse().unwrap_or(*x);
            Number::from_f64(rounded).map(Value::Number).unwrap_or(Value::Null)
        }
        Cell::Float(_) => Value::Null,
        Cell::Str(s) => Value::String(s.clone()),
        Cell::Null => Value::Null,
    }
}

/// Formats a float with nine significant digits: positional notation with
/// trailing zeros trimmed for magnitudes in [1e-4, 1e9), scientific
/// notation outside that range, and `nan`/`inf`/`0` spelled literally.
pub fn fmt_sig9(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if x == 0.0 {
        return "0".to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-4..=8).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.8e}")
    }
}
