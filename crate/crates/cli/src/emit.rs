//! Deterministic table emission: aligned text, CSV with a header row, or a
//! JSON array of objects. Reals are written with 12 decimal places.

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use serde_json::{Map, Value};

use crate::cli::{Format, OutputArgs};

#[derive(Debug, Clone)]
pub enum Cell {
    Int(i64),
    Real(f64),
    /// Text in tables, structured value in JSON.
    Rich(String, Value),
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Real(v) => format!("{v:.12}"),
            Cell::Rich(s, _) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::from(*v),
            Cell::Real(v) => round12(*v),
            Cell::Rich(_, v) => v.clone(),
        }
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u32> for Cell {
    fn from(v: u32) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Real(v)
    }
}

/// The value printed with 12 decimals, read back as a JSON number.
pub fn round12(v: f64) -> Value {
    format!("{v:.12}")
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Self {
            headers: headers.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write<W: Write>(&self, format: Format, mut w: W) -> Result<()> {
        match format {
            Format::Text => self.write_text(&mut w)?,
            Format::Csv => {
                let mut csv = csv::Writer::from_writer(&mut w);
                csv.write_record(&self.headers)?;
                for row in &self.rows {
                    csv.write_record(row.iter().map(Cell::text))?;
                }
                csv.flush()?;
            }
            Format::Json => {
                let records: Vec<Value> = self
                    .rows
                    .iter()
                    .map(|row| {
                        let map: Map<String, Value> = self
                            .headers
                            .iter()
                            .zip(row)
                            .map(|(h, c)| (h.to_string(), c.json()))
                            .collect();
                        Value::Object(map)
                    })
                    .collect();
                serde_json::to_writer_pretty(&mut w, &records)?;
                writeln!(w)?;
            }
        }
        w.flush()?;
        Ok(())
    }

    fn write_text<W: Write>(&self, w: &mut W) -> io::Result<()> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::text).collect())
            .collect();
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        for row in &cells {
            for (width, cell) in widths.iter_mut().zip(row) {
                *width = (*width).max(cell.len());
            }
        }
        let line = |fields: Vec<&str>| {
            let padded: Vec<String> = fields
                .iter()
                .zip(&widths)
                .map(|(f, w)| format!("{f:>w$}"))
                .collect();
            padded.join("  ")
        };
        writeln!(w, "{}", line(self.headers.clone()))?;
        for row in &cells {
            writeln!(w, "{}", line(row.iter().map(String::as_str).collect()))?;
        }
        Ok(())
    }

    pub fn emit(&self, output: &OutputArgs) -> Result<()> {
        with_output(output.out.as_deref(), |w| self.write(output.format, w))
    }
}

/// Run `f` against the named file, or standard output.
pub fn with_output<F>(path: Option<&Path>, f: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    match path {
        Some(path) => write_atomic(path, f),
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            f(&mut lock)
        }
    }
}

/// Write through a sibling temporary file renamed into place, so an
/// interrupted run never leaves a truncated output behind.
pub fn write_atomic<F>(path: &Path, f: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    check_parent(path)?;
    let mut tmp_name = path.file_name().unwrap_or_default().to_os_string();
    tmp_name.push(".partial");
    let tmp = path.with_file_name(tmp_name);
    let result = (|| {
        let file =
            File::create(&tmp).with_context(|| format!("cannot create {}", tmp.display()))?;
        let mut w = BufWriter::new(file);
        f(&mut w)?;
        w.flush()
            .with_context(|| format!("cannot write {}", path.display()))?;
        fs::rename(&tmp, path).with_context(|| format!("cannot write {}", path.display()))
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

pub fn check_parent(path: &Path) -> Result<()> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        anyhow::ensure!(
            parent.is_dir(),
            "output directory {} does not exist",
            parent.display()
        );
    }
    Ok(())
}
