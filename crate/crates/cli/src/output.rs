//! Record emission: json-lines, csv, and human-readable tables.
//!
//! Contract: floats are rounded to 12 significant digits before printing,
//! rationals print as "p/q" strings, complex values as [re, im] pairs,
//! json keys are sorted, and identical runs produce byte-identical output.

use std::fmt::Write as _;
use std::io::Write;

use serde_json::{Map, Number, Value};

#[derive(Copy, Clone, PartialEq, Eq, Debug, clap::ValueEnum)]
pub enum Format {
    JsonLines,
    Csv,
    Human,
}

/// Round to 12 significant digits; the shortest representation of the
/// rounded value is what gets printed.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

#[derive(Clone, Debug)]
pub enum Cell {
    UInt(u64),
    Float(f64),
    Bool(bool),
    Str(String),
    /// Exact rational rendered as "p/q" (or "p" when the denominator is 1).
    Rational(String),
    Complex(f64, f64),
    UIntList(Vec<u64>),
    Null,
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::UInt(v) => Value::Number((*v).into()),
            Cell::Float(v) => Number::from_f64(sig12(*v))
                .map(Value::Number)
                .unwrap_or(Value::Null),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Str(s) => Value::String(s.clone()),
            Cell::Rational(s) => Value::String(s.clone()),
            Cell::Complex(re, im) => Value::Array(vec![
                Number::from_f64(sig12(*re)).map(Value::Number).unwrap_or(Value::Null),
                Number::from_f64(sig12(*im)).map(Value::Number).unwrap_or(Value::Null),
            ]),
            Cell::UIntList(v) => {
                Value::Array(v.iter().map(|&x| Value::Number(x.into())).collect())
            }
            Cell::Null => Value::Null,
        }
    }

    fn to_text(&self) -> String {
        match self {
            Cell::UInt(v) => v.to_string(),
            Cell::Float(v) => format!("{}", sig12(*v)),
            Cell::Bool(v) => v.to_string(),
            Cell::Str(s) | Cell::Rational(s) => s.clone(),
            Cell::Complex(re, im) => format!("[{}, {}]", sig12(*re), sig12(*im)),
            Cell::UIntList(v) => {
                let mut s = String::from("[");
                for (i, x) in v.iter().enumerate() {
                    if i > 0 {
                        s.push(',');
                    }
                    let _ = write!(s, "{x}");
                }
                s.push(']');
                s
            }
            Cell::Null => String::new(),
        }
    }
}

/// One output record: (column, cell) pairs in schema order.
pub type Record = Vec<(&'static str, Cell)>;

fn human_width(column: &str) -> usize {
    column.len().max(14)
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Streaming record writer. Every run starts with a header carrying the
/// command name and seed; records follow in key order.
pub struct Emitter<W: Write> {
    format: Format,
    columns: Vec<&'static str>,
    out: W,
    wrote_columns: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(format: Format, columns: Vec<&'static str>, out: W) -> Self {
        Emitter { format, columns, out, wrote_columns: false }
    }

    /// The run header: command, seed, and any extra metadata.
    pub fn header(&mut self, command: &str, seed: u64, extras: &[(&str, Cell)]) {
        match self.format {
            Format::JsonLines => {
                let mut map = Map::new();
                map.insert("type".into(), Value::String("header".into()));
                map.insert("command".into(), Value::String(command.into()));
                map.insert("seed".into(), Value::Number(seed.into()));
                for (k, v) in extras {
                    map.insert((*k).into(), v.to_json());
                }
                let _ = writeln!(self.out, "{}", Value::Object(map));
            }
            Format::Csv | Format::Human => {
                let mut line = format!("# command={command} seed={seed}");
                for (k, v) in extras {
                    let _ = write!(line, " {k}={}", v.to_text());
                }
                let _ = writeln!(self.out, "{line}");
            }
        }
    }

    fn ensure_columns(&mut self) {
        if self.wrote_columns {
            return;
        }
        self.wrote_columns = true;
        match self.format {
            Format::JsonLines => {}
            Format::Csv => {
                let _ = writeln!(self.out, "{}", self.columns.join(","));
            }
            Format::Human => {
                let row: Vec<String> = self
                    .columns
                    .iter()
                    .map(|c| format!("{c:<w$}", w = human_width(c)))
                    .collect();
                let _ = writeln!(self.out, "{}", row.join("  ").trim_end());
            }
        }
    }

    pub fn emit(&mut self, record: &Record) {
        self.ensure_columns();
        match self.format {
            Format::JsonLines => {
                // serde_json maps are BTree-backed: keys serialize sorted
                let mut map = Map::new();
                for (k, v) in record {
                    map.insert((*k).into(), v.to_json());
                }
                let _ = writeln!(self.out, "{}", Value::Object(map));
            }
            Format::Csv => {
                let line: Vec<String> = self
                    .columns
                    .iter()
                    .map(|c| {
                        record
                            .iter()
                            .find(|(k, _)| k == c)
                            .map(|(_, v)| csv_escape(&v.to_text()))
                            .unwrap_or_default()
                    })
                    .collect();
                let _ = writeln!(self.out, "{}", line.join(","));
            }
            Format::Human => {
                let line: Vec<String> = self
                    .columns
                    .iter()
                    .map(|c| {
                        let text = record
                            .iter()
                            .find(|(k, _)| k == c)
                            .map(|(_, v)| v.to_text())
                            .unwrap_or_default();
                        format!("{text:<w$}", w = human_width(c))
                    })
                    .collect();
                let _ = writeln!(self.out, "{}", line.join("  ").trim_end());
            }
        }
    }

    /// Trailing summary: a typed record in json-lines, a comment line in
    /// csv/human.
    pub fn summary(&mut self, fields: &[(&str, Cell)]) {
        self.ensure_columns();
        match self.format {
            Format::JsonLines => {
                let mut map = Map::new();
                map.insert("type".into(), Value::String("summary".into()));
                for (k, v) in fields {
                    map.insert((*k).into(), v.to_json());
                }
                let _ = writeln!(self.out, "{}", Value::Object(map));
            }
            Format::Csv | Format::Human => {
                let mut line = String::from("#");
                for (k, v) in fields {
                    let _ = write!(line, " {k}={}", v.to_text());
                }
                let _ = writeln!(self.out, "{line}");
            }
        }
    }
}
