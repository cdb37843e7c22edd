//! Tables, checks and their CSV/JSON serialization.
//!
//! Floats are written as `{:.16e}` (17 significant digits) in both formats
//! and JSON object keys come out sorted, so identical runs give identical
//! bytes.

use std::io::{self, Write};

use num_complex::Complex64;
use serde::Serialize;
use serde_json::ser::{Formatter, PrettyFormatter};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

pub fn fmt_f64(x: f64) -> String {
    // -0.0 prints as 0
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    F(f64),
    U(u64),
    B(bool),
    S(String),
    C(Complex64),
    Empty,
}

impl Cell {
    fn csv_fields(&self, complex: bool) -> Vec<String> {
        match self {
            Cell::F(x) => vec![fmt_f64(*x)],
            Cell::U(n) => vec![n.to_string()],
            Cell::B(b) => vec![b.to_string()],
            Cell::S(s) => vec![s.clone()],
            Cell::C(z) => vec![fmt_f64(z.re), fmt_f64(z.im)],
            Cell::Empty if complex => vec![String::new(), String::new()],
            Cell::Empty => vec![String::new()],
        }
    }

    fn json(&self) -> Value {
        let num = |x: f64| serde_json::Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null);
        match self {
            Cell::F(x) => num(*x),
            Cell::U(n) => json!(n),
            Cell::B(b) => json!(b),
            Cell::S(s) => json!(s),
            Cell::C(z) => json!({ "re": num(z.re), "im": num(z.im) }),
            Cell::Empty => Value::Null,
        }
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::F(x)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::U(n as u64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::B(b)
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::S(s)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::S(s.to_string())
    }
}

impl From<Complex64> for Cell {
    fn from(z: Complex64) -> Self {
        Cell::C(z)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map(Into::into).unwrap_or(Cell::Empty)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    pub name: &'static str,
    /// Complex columns expand to `<name>_re`, `<name>_im` in CSV.
    pub complex: bool,
}

pub const fn col(name: &'static str) -> Column {
    Column { name, complex: false }
}

pub const fn ccol(name: &'static str) -> Column {
    Column { name, complex: true }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<Column>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: Vec<Column>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    AtMost,
    AtLeast,
}

impl Bound {
    pub fn as_str(self) -> &'static str {
        match self {
            Bound::AtMost => "<=",
            Bound::AtLeast => ">=",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub bound: Bound,
    pub limit: f64,
}

impl Check {
    pub fn at_most(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Check { name: name.into(), value, bound: Bound::AtMost, limit }
    }

    pub fn at_least(name: impl Into<String>, value: f64, limit: f64) -> Self {
        Check { name: name.into(), value, bound: Bound::AtLeast, limit }
    }

    /// A yes/no condition recorded as a check on 0/1.
    pub fn holds(name: impl Into<String>, ok: bool) -> Self {
        Check::at_least(name, if ok { 1.0 } else { 0.0 }, 1.0)
    }

    pub fn pass(&self) -> bool {
        match self.bound {
            Bound::AtMost => self.value <= self.limit,
            Bound::AtLeast => self.value >= self.limit,
        }
    }

    /// How far past the limit a failing check is; larger is worse.
    fn severity(&self) -> f64 {
        let (num, den) = match self.bound {
            Bound::AtMost => (self.value, self.limit),
            Bound::AtLeast => (self.limit, self.value),
        };
        if den > 0.0 {
            num / den
        } else {
            f64::INFINITY
        }
    }

    fn json(&self) -> Value {
        json!({
            "name": self.name,
            "value": Cell::F(self.value).json(),
            "bound": self.bound.as_str(),
            "limit": Cell::F(self.limit).json(),
            "pass": self.pass(),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub command: &'static str,
    pub config: Map<String, Value>,
    pub table: Table,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: &'static str, config: Map<String, Value>, table: Table) -> Self {
        Report { command, config, table, checks: Vec::new() }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass())
    }

    pub fn worst_failure(&self) -> Option<&Check> {
        self.failures().max_by(|a, b| a.severity().total_cmp(&b.severity()))
    }

    pub fn write<W: Write>(&self, format: Format, out: W) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "# schema_version={SCHEMA_VERSION} command={}", self.command)?;
        let mut w = csv::Writer::from_writer(out);
        let header: Vec<String> = self
            .table
            .columns
            .iter()
            .flat_map(|c| {
                if c.complex {
                    vec![format!("{}_re", c.name), format!("{}_im", c.name)]
                } else {
                    vec![c.name.to_string()]
                }
            })
            .collect();
        w.write_record(&header)?;
        for row in &self.table.rows {
            let fields: Vec<String> = row
                .iter()
                .zip(&self.table.columns)
                .flat_map(|(cell, c)| cell.csv_fields(c.complex))
                .collect();
            w.write_record(&fields)?;
        }
        w.flush()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = self
            .table
            .rows
            .iter()
            .map(|row| {
                let m: Map<String, Value> = self
                    .table
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| (c.name.to_string(), cell.json()))
                    .collect();
                Value::Object(m)
            })
            .collect();
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "config": Value::Object(self.config.clone()),
            "rows": rows,
            "checks": self.checks.iter().map(Check::json).collect::<Vec<_>>(),
            "status": if self.failures().next().is_none() { "ok" } else { "violation" },
        })
    }

    fn write_json<W: Write>(&self, mut out: W) -> io::Result<()> {
        let mut ser = serde_json::Serializer::with_formatter(&mut out, SciFormatter::default());
        self.to_json().serialize(&mut ser).map_err(io::Error::other)?;
        writeln!(out)
    }
}

/// Pretty printer that writes floats in fixed-width scientific notation.
#[derive(Default)]
struct SciFormatter(PrettyFormatter<'static>);

impl Formatter for SciFormatter {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt_f64(value).as_bytes())
    }

    fn begin_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_array(writer)
    }

    fn end_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object(writer)
    }

    fn end_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object_value(writer)
    }
}
