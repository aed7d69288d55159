//! Tabular reports rendered as CSV or JSON.
//!
//! Floats are printed with 17 significant digits in both formats so values
//! round-trip exactly. Non-finite values become empty CSV fields and JSON `null`.

use std::fmt::Write as _;

use clap::ValueEnum;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Bool(bool),
    Missing,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as u64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Missing, Into::into)
    }
}

pub fn format_float(v: f64) -> Option<String> {
    v.is_finite().then(|| format!("{v:.16e}"))
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Num(v) => format_float(*v).unwrap_or_default(),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => csv_escape(s),
            Cell::Missing => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Num(v) => format_float(*v).unwrap_or_else(|| "null".into()),
            Cell::Int(v) => v.to_string(),
            Cell::Bool(v) => v.to_string(),
            Cell::Text(s) => json_string(s),
            Cell::Missing => "null".into(),
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

#[derive(Debug, Clone)]
pub struct Table {
    pub name: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(name: &'static str, columns: &[&'static str]) -> Self {
        Table {
            name,
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    fn write_csv(&self, out: &mut String) {
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
    }

    fn write_json(&self, out: &mut String) {
        out.push('[');
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(if i == 0 { "\n    {" } else { ",\n    {" });
            for (k, (col, cell)) in self.columns.iter().zip(row).enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                let _ = write!(out, "{}: {}", json_string(col), cell.json());
            }
            out.push('}');
        }
        out.push_str(if self.rows.is_empty() { "]" } else { "\n  ]" });
    }
}

/// A command's complete output.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: &'static str,
    pub params: Vec<(&'static str, Cell)>,
    pub tables: Vec<Table>,
    pub summary: Vec<(&'static str, Cell)>,
}

impl Report {
    pub fn new(command: &'static str) -> Self {
        Report {
            command,
            params: Vec::new(),
            tables: Vec::new(),
            summary: Vec::new(),
        }
    }

    pub fn param(mut self, key: &'static str, value: impl Into<Cell>) -> Self {
        self.params.push((key, value.into()));
        self
    }

    pub fn summarize(&mut self, key: &'static str, value: impl Into<Cell>) {
        self.summary.push((key, value.into()));
    }

    /// JSON text: one object with params at the top level, then tables, then the summary.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\n");
        let _ = write!(out, "  \"command\": {}", json_string(self.command));
        for (k, v) in &self.params {
            let _ = write!(out, ",\n  {}: {}", json_string(k), v.json());
        }
        for t in &self.tables {
            let _ = write!(out, ",\n  {}: ", json_string(t.name));
            t.write_json(&mut out);
        }
        out.push_str(",\n  \"summary\": {");
        for (i, (k, v)) in self.summary.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            let _ = write!(out, "{}: {}", json_string(k), v.json());
        }
        out.push_str("}\n}\n");
        out
    }

    /// CSV text for the first table. Further tables and the summary are returned
    /// separately as comment lines for the diagnostic stream.
    pub fn to_csv(&self) -> (String, String) {
        let mut main = String::new();
        let mut side = String::new();
        let mut tables = self.tables.iter();
        if let Some(t) = tables.next() {
            t.write_csv(&mut main);
        }
        for t in tables {
            let _ = writeln!(side, "# {}", t.name);
            t.write_csv(&mut side);
        }
        for (k, v) in &self.summary {
            let _ = writeln!(side, "# {k}={}", v.csv());
        }
        (main, side)
    }
}
