//! Output serialization. CSV carries a mandatory header, floats at 17
//! significant digits (lossless round-trip), booleans as `true`/`false`,
//! and undefined numerics as empty cells explained by the `status` column.
//! JSON mirrors the same table as a `columns` + `rows` document.

use crate::config::OutputFormat;
use crate::CliError;
use std::io::Write;

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Bool(bool),
    Text(String),
    Empty,
}

impl Cell {
    fn csv_field(&self) -> String {
        match self {
            Cell::Num(x) => format_float(*x),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json_value(&self) -> serde_json::Value {
        match self {
            Cell::Num(x) => serde_json::Number::from_f64(*x)
                .map(serde_json::Value::Number)
                .unwrap_or(serde_json::Value::Null),
            Cell::Bool(b) => serde_json::Value::Bool(*b),
            Cell::Text(s) => serde_json::Value::String(s.clone()),
            Cell::Empty => serde_json::Value::Null,
        }
    }
}

/// 17 significant digits: one leading digit plus 16 after the point.
pub fn format_float(x: f64) -> String {
    // fold negative zero into plain zero
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// A computed record table with a fixed column set.
#[derive(Debug, Clone)]
pub struct Table {
    pub command: &'static str,
    pub seed: u64,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    /// Every row must match the column count; every numeric cell must be
    /// finite. Run before writing anything.
    pub fn check_shape(&self) -> Result<(), CliError> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.columns.len() {
                return Err(CliError::numeric(format!(
                    "row {i} has {} cells, expected {}",
                    row.len(),
                    self.columns.len()
                )));
            }
            for (cell, col) in row.iter().zip(&self.columns) {
                if let Cell::Num(x) = cell {
                    if !x.is_finite() {
                        return Err(CliError::numeric(format!(
                            "row {i}, column {col}: non-finite value {x}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Index of a named column.
    pub fn column(&self, name: &str) -> usize {
        self.columns
            .iter()
            .position(|c| *c == name)
            .unwrap_or_else(|| panic!("unknown column {name}"))
    }

    fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        let mut csv = csv::Writer::from_writer(&mut w);
        csv.write_record(&self.columns)?;
        for row in &self.rows {
            csv.write_record(row.iter().map(|c| c.csv_field()))?;
        }
        csv.flush()?;
        Ok(())
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "command": self.command,
            "seed": self.seed,
            "columns": self.columns,
            "rows": self.rows.iter()
                .map(|r| r.iter().map(Cell::json_value).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// What a command produces: a record table or a single JSON document.
#[derive(Debug, Clone)]
pub enum Output {
    Table(Table),
    Document(serde_json::Value),
}

pub fn write_output<W: Write>(
    output: &Output,
    format: OutputFormat,
    mut w: W,
) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::io(format!("writing output: {e}"));
    match (output, format) {
        (Output::Table(t), OutputFormat::Csv) => t.write_csv(&mut w).map_err(io),
        (Output::Table(t), OutputFormat::Json) => {
            serde_json::to_writer_pretty(&mut w, &t.to_json())
                .map_err(|e| CliError::io(format!("writing output: {e}")))?;
            writeln!(w).map_err(io)
        }
        (Output::Document(doc), OutputFormat::Json) => {
            serde_json::to_writer_pretty(&mut w, doc)
                .map_err(|e| CliError::io(format!("writing output: {e}")))?;
            writeln!(w).map_err(io)
        }
        (Output::Document(_), OutputFormat::Csv) => Err(CliError::config(
            "cycle-report emits a single JSON document; csv format is not supported".into(),
        )),
    }
}
