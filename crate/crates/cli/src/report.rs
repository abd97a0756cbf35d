//! Report documents: header, key/value sections, tables and checks, rendered
//! as aligned text or CSV blocks.

use std::fmt;
use std::io::{self, Write};

use harmap_core::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Complex(Complex64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Num(x) => write!(f, "{}", Num(*x)),
            Value::Int(n) => write!(f, "{n}"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Text(s) => f.write_str(s),
            Value::Complex(z) if z.im < 0.0 || (z.im == 0.0 && z.im.is_sign_negative()) => {
                write!(f, "{}-{}i", Num(z.re), Num(-z.im))
            }
            Value::Complex(z) => write!(f, "{}+{}i", Num(z.re), Num(z.im)),
        }
    }
}

/// Shortest round-trip form, switching to exponent notation outside
/// `[1e-4, 1e15)`.
pub struct Num(pub f64);

impl fmt::Display for Num {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.0.abs();
        if a == 0.0 || !a.is_finite() || (1e-4..1e15).contains(&a) {
            write!(f, "{}", self.0)
        } else {
            write!(f, "{:e}", self.0)
        }
    }
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<usize> for Value {
    fn from(n: usize) -> Self {
        Value::Int(n as i64)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<u64> for Value {
    fn from(n: u64) -> Self {
        Value::Int(n as i64)
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_string())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<Complex64> for Value {
    fn from(z: Complex64) -> Self {
        Value::Complex(z)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Section {
    pub name: String,
    pub entries: Vec<(String, Value)>,
}

impl Section {
    pub fn push(&mut self, key: &str, value: impl Into<Value>) {
        self.entries.push((key.to_string(), value.into()));
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub status: Status,
    /// Signed slack; negative when the check fails.
    pub margin: Option<f64>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Report {
    pub header: Vec<(String, Value)>,
    pub sections: Vec<Section>,
    pub tables: Vec<Table>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn meta(&mut self, key: &str, value: impl Into<Value>) {
        self.header.push((key.to_string(), value.into()));
    }

    pub fn section(&mut self, name: &str) -> &mut Section {
        self.sections.push(Section {
            name: name.to_string(),
            entries: Vec::new(),
        });
        self.sections.last_mut().unwrap()
    }

    pub fn table(&mut self, name: &str, columns: &[&str], rows: Vec<Vec<Value>>) {
        self.tables.push(Table {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows,
        });
    }

    pub fn check(&mut self, name: &str, passed: bool, margin: Option<f64>, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: if passed { Status::Pass } else { Status::Fail },
            margin,
            detail: detail.into(),
        });
    }

    pub fn skip(&mut self, name: &str, reason: impl Into<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            status: Status::Skip,
            margin: None,
            detail: reason.into(),
        });
    }

    pub fn failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    /// Appends another report's body under a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut s in other.sections {
            s.name = format!("{prefix}.{}", s.name);
            self.sections.push(s);
        }
        for mut t in other.tables {
            t.name = format!("{prefix}.{}", t.name);
            self.tables.push(t);
        }
        for mut c in other.checks {
            c.name = format!("{prefix}: {}", c.name);
            self.checks.push(c);
        }
    }

    pub fn write_text<W: Write>(&self, out: &mut W) -> io::Result<()> {
        for (k, v) in &self.header {
            writeln!(out, "{k}: {v}")?;
        }
        for s in &self.sections {
            writeln!(out, "\n[{}]", s.name)?;
            let width = s.entries.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &s.entries {
                writeln!(out, "{k:<width$} = {v}")?;
            }
        }
        for t in &self.tables {
            writeln!(out, "\n[{}]", t.name)?;
            let cells: Vec<Vec<String>> = t
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect();
            let widths: Vec<usize> = (0..t.columns.len())
                .map(|i| {
                    cells
                        .iter()
                        .map(|r| r.get(i).map_or(0, |c| c.len()))
                        .chain([t.columns[i].len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |items: &[String]| {
                items
                    .iter()
                    .zip(&widths)
                    .map(|(c, &w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            writeln!(out, "{}", line(&t.columns))?;
            for r in &cells {
                writeln!(out, "{}", line(r))?;
            }
        }
        if !self.checks.is_empty() {
            writeln!(out, "\n[checks]")?;
            for c in &self.checks {
                let tag = match c.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::Skip => "SKIP",
                };
                let margin = c.margin.map(|m| format!(" (margin {})", Num(m))).unwrap_or_default();
                if c.detail.is_empty() {
                    writeln!(out, "{tag} {}{margin}", c.name)?;
                } else {
                    writeln!(out, "{tag} {}{margin}: {}", c.name, c.detail)?;
                }
            }
        }
        writeln!(out, "\nresult: {}", if self.failed() { "fail" } else { "pass" })
    }

    /// Blocks separated by blank lines: `key,value` for the header and
    /// sections (keys as `section.key`), one block per table, then
    /// `check,status,margin,detail`.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        let mut blocks = vec![csv_block(|w| {
            w.write_record(["key", "value"])?;
            for (k, v) in &self.header {
                w.write_record([k.clone(), v.to_string()])?;
            }
            for s in &self.sections {
                for (k, v) in &s.entries {
                    w.write_record([format!("{}.{k}", s.name), v.to_string()])?;
                }
            }
            Ok(())
        })?];
        for t in &self.tables {
            blocks.push(csv_block(|w| {
                w.write_record(std::iter::once("table").chain(t.columns.iter().map(String::as_str)))?;
                for r in &t.rows {
                    w.write_record(std::iter::once(t.name.clone()).chain(r.iter().map(|v| v.to_string())))?;
                }
                Ok(())
            })?);
        }
        if !self.checks.is_empty() {
            blocks.push(csv_block(|w| {
                w.write_record(["check", "status", "margin", "detail"])?;
                for c in &self.checks {
                    let status = match c.status {
                        Status::Pass => "pass",
                        Status::Fail => "fail",
                        Status::Skip => "skip",
                    };
                    let margin = c.margin.map(|m| Num(m).to_string()).unwrap_or_default();
                    w.write_record([c.name.as_str(), status, &margin, &c.detail])?;
                }
                Ok(())
            })?);
        }
        out.write_all(blocks.join(&b"\n"[..]).as_slice())
    }
}

fn csv_block<F>(fill: F) -> io::Result<Vec<u8>>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>,
{
    let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
    fill(&mut w)?;
    w.into_inner().map_err(|e| e.into_error())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Report {
        let mut r = Report::default();
        r.meta("command", "harmap test");
        r.section("values").push("x, y", 0.5);
        r.table("rows", &["n", "bound"], vec![vec![1usize.into(), 2.5.into()]]);
        r.check("ok", true, Some(0.1), "fine");
        r.skip("other", "not applicable");
        r
    }

    #[test]
    fn number_display() {
        assert_eq!(Value::from(0.5).to_string(), "0.5");
        assert_eq!(Value::from(1.2e-14).to_string(), "1.2e-14");
        assert_eq!(Value::from(-3e20).to_string(), "-3e20");
        assert_eq!(Value::from(f64::INFINITY).to_string(), "inf");
        assert_eq!(Value::from(0.0).to_string(), "0");
    }

    #[test]
    fn complex_display() {
        assert_eq!(Value::from(Complex64::new(0.5, -0.25)).to_string(), "0.5-0.25i");
        assert_eq!(Value::from(Complex64::new(0.0, 1.0)).to_string(), "0+1i");
    }

    #[test]
    fn text_layout() {
        let mut out = Vec::new();
        sample().write_text(&mut out).unwrap();
        let s = String::from_utf8(out).unwrap();
        assert!(s.contains("[values]\nx, y = 0.5\n"));
        assert!(s.contains("n  bound\n1    2.5\n"));
        assert!(s.contains("PASS ok (margin 0.1): fine"));
        assert!(s.ends_with("result: pass\n"));
    }

    #[test]
    fn csv_blocks() {
        let mut out = Vec::new();
        sample().write_csv(&mut out).unwrap();
        let s = String::from_utf8(out).unwrap();
        let blocks: Vec<&str> = s.split("\n\n").collect();
        assert_eq!(blocks.len(), 3);
        assert!(blocks[0].contains("\"values.x, y\",0.5"));
        assert_eq!(blocks[1], "table,n,bound\nrows,1,2.5");
        assert!(blocks[2].starts_with("check,status,margin,detail\nok,pass,0.1,fine\nother,skip,,not applicable"));
    }

    #[test]
    fn failure_propagates() {
        let mut r = sample();
        assert!(!r.failed());
        r.check("bad", false, Some(-1.0), "");
        assert!(r.failed());
    }
}
