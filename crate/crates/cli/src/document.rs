//! Report documents and their CSV/JSON renderings.
//!
//! Both renderings are pure functions of the document, so identical
//! invocations produce identical bytes.

use std::str::FromStr;

use orderstat::decimal::fraction_string;
use orderstat::{Rational, VerificationReport};
use serde_json::{Map, Number, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// One table cell. Decimals carry their final textual form and become JSON
/// numbers; exact values become `"num/den"` strings.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i128),
    /// Integer of any size, as decimal digits.
    BigInt(String),
    Decimal(String),
    Fraction(Rational),
    Text(String),
    Bool(bool),
    List(Vec<Cell>),
    Empty,
}

impl Cell {
    /// Shortest round-trip text for finite values; non-finite ones are empty.
    pub fn float(x: f64) -> Cell {
        if x.is_finite() {
            Cell::Decimal(format!("{x:?}").trim_end_matches(".0").to_string())
        } else {
            Cell::Empty
        }
    }

    pub fn opt<T>(value: Option<T>, f: impl FnOnce(T) -> Cell) -> Cell {
        value.map_or(Cell::Empty, f)
    }

    pub fn ints(values: &[usize]) -> Cell {
        Cell::List(values.iter().map(|&v| Cell::from(v)).collect())
    }

    pub fn floats(values: &[f64]) -> Cell {
        Cell::List(values.iter().map(|&v| Cell::float(v)).collect())
    }

    fn csv_text(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::BigInt(s) | Cell::Decimal(s) | Cell::Text(s) => s.clone(),
            Cell::Fraction(r) => fraction_string(r),
            Cell::Bool(b) => b.to_string(),
            Cell::List(items) => items.iter().map(Cell::csv_text).collect::<Vec<_>>().join(";"),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => Value::Number(Number::from_str(&v.to_string()).expect("integer literal")),
            Cell::BigInt(s) | Cell::Decimal(s) => match Number::from_str(s) {
                Ok(n) => Value::Number(n),
                Err(_) => Value::String(s.clone()),
            },
            Cell::Fraction(r) => Value::String(fraction_string(r)),
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::List(items) => Value::Array(items.iter().map(Cell::json).collect()),
            Cell::Empty => Value::Null,
        }
    }
}

macro_rules! int_cell {
    ($($t:ty),*) => {$(
        impl From<$t> for Cell {
            fn from(v: $t) -> Cell {
                Cell::Int(v as i128)
            }
        }
    )*};
}
int_cell!(usize, u64, i64, u32);

impl From<bool> for Cell {
    fn from(v: bool) -> Cell {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Cell {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Cell {
        Cell::Text(v)
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Summary {
    pub passed: u64,
    pub failed: u64,
    /// Extra summary fields, in output order.
    pub details: Vec<(String, Cell)>,
    pub failures: Vec<String>,
}

impl Summary {
    pub fn from_report(report: &VerificationReport) -> Self {
        let failed = report.failures.len() as u64;
        Summary {
            passed: report.checks_run - failed,
            failed,
            details: Vec::new(),
            failures: report.failures.iter().map(|f| f.to_string()).collect(),
        }
    }

    pub fn detail(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.details.push((key.to_string(), value.into()));
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportDocument {
    pub command: String,
    pub parameters: Vec<(String, Cell)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub summary: Summary,
    pub tool_version: String,
    pub seed: Option<u64>,
}

impl ReportDocument {
    pub fn new(command: &str, columns: &[&str]) -> Self {
        ReportDocument {
            command: command.to_string(),
            parameters: Vec::new(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
            summary: Summary::default(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            seed: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Cell>) -> Self {
        self.parameters.push((key.to_string(), value.into()));
        self
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// Header row then one line per row, LF-terminated.
    pub fn to_csv(&self) -> String {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::csv_text)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
    }

    pub fn to_json_value(&self) -> Value {
        let mut doc = Map::new();
        doc.insert("command".into(), Value::String(self.command.clone()));
        doc.insert("tool_version".into(), Value::String(self.tool_version.clone()));
        doc.insert(
            "seed".into(),
            self.seed.map_or(Value::Null, |s| Value::Number(s.into())),
        );
        doc.insert(
            "parameters".into(),
            Value::Object(self.parameters.iter().map(|(k, v)| (k.clone(), v.json())).collect()),
        );
        doc.insert(
            "columns".into(),
            Value::Array(self.columns.iter().cloned().map(Value::String).collect()),
        );
        let rows = self
            .rows
            .iter()
            .map(|row| Value::Object(self.columns.iter().cloned().zip(row.iter().map(Cell::json)).collect()))
            .collect();
        doc.insert("rows".into(), Value::Array(rows));
        let mut summary = Map::new();
        summary.insert("passed".into(), Value::Number(self.summary.passed.into()));
        summary.insert("failed".into(), Value::Number(self.summary.failed.into()));
        for (k, v) in &self.summary.details {
            summary.insert(k.clone(), v.json());
        }
        summary.insert(
            "failures".into(),
            Value::Array(self.summary.failures.iter().cloned().map(Value::String).collect()),
        );
        doc.insert("summary".into(), Value::Object(summary));
        Value::Object(doc)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()).expect("values serialize");
        s.push('\n');
        s
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    /// One line for stderr.
    pub fn status_line(&self) -> String {
        if self.summary.passed + self.summary.failed == 0 {
            return format!("{}: {} rows", self.command, self.rows.len());
        }
        format!(
            "{}: {} ({} passed, {} failed)",
            self.command,
            if self.passed() { "PASS" } else { "FAIL" },
            self.summary.passed,
            self.summary.failed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> ReportDocument {
        let mut doc = ReportDocument::new("table", &["k", "h_exact", "h", "note"]).param("n", 5usize);
        doc.push(vec![
            Cell::from(1usize),
            Cell::Fraction(Rational::new(3.into(), 7.into())),
            Cell::Decimal("0.429".into()),
            Cell::from("a,b"),
        ]);
        doc.seed = Some(7);
        doc
    }

    #[test]
    fn csv_quotes_and_uses_lf() {
        assert_eq!(sample().to_csv(), "k,h_exact,h,note\n1,3/7,0.429,\"a,b\"\n");
    }

    #[test]
    fn json_keeps_decimal_text_and_order() {
        let json = sample().to_json();
        assert!(json.contains("\"h\": 0.429"));
        assert!(json.contains("\"h_exact\": \"3/7\""));
        let keys: Vec<_> = sample().to_json_value().as_object().unwrap().keys().cloned().collect();
        assert_eq!(
            keys,
            [
                "command",
                "tool_version",
                "seed",
                "parameters",
                "columns",
                "rows",
                "summary"
            ]
        );
    }

    #[test]
    fn floats_round_trip() {
        assert_eq!(Cell::float(0.1), Cell::Decimal("0.1".into()));
        assert_eq!(Cell::float(2.0), Cell::Decimal("2".into()));
        assert_eq!(Cell::float(f64::NAN), Cell::Empty);
        assert_eq!(Cell::float(1e-20).json().to_string(), "1e-20");
    }
}
