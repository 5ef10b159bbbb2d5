//! Rendering of reports as aligned tables, JSON or CSV.

use std::io::{self, Write};

use cp2q_core::qscalar::text::format_scalar;
use cp2q_core::qscalar::QScalar;
use serde_json::{Map, Number, Value};

/// Bumped whenever a field is renamed or changes meaning.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// Output of one subcommand. `fields` is the JSON body; `columns`/`rows`
/// are the tabular view used by the table and CSV formats.
#[derive(Clone, Debug)]
pub struct Report {
    pub kind: &'static str,
    pub fields: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub passed: bool,
}

impl Report {
    pub fn new(kind: &'static str) -> Self {
        Report { kind, fields: Map::new(), columns: Vec::new(), rows: Vec::new(), passed: true }
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    pub fn table(&mut self, columns: &[&'static str]) -> &mut Self {
        self.columns = columns.to_vec();
        self
    }

    pub fn row(&mut self, cells: Vec<String>) {
        debug_assert_eq!(cells.len(), self.columns.len());
        self.rows.push(cells);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Json => self.write_json(out),
            Format::Csv => self.write_csv(out),
            Format::Table => self.write_table(out),
        }
    }

    fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut body = self.fields.clone();
        body.insert("schema".into(), Value::from(format!("cp2q.{}", self.kind)));
        body.insert("schema_version".into(), Value::from(SCHEMA_VERSION));
        body.insert("passed".into(), Value::from(self.passed));
        serde_json::to_writer_pretty(&mut *out, &Value::Object(body))?;
        writeln!(out)
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        if self.columns.is_empty() {
            w.write_record(["key", "value"])?;
            for (k, v) in self.scalar_fields() {
                w.write_record([k.as_str(), v.as_str()])?;
            }
        } else {
            w.write_record(&self.columns)?;
            for r in &self.rows {
                w.write_record(r)?;
            }
        }
        w.flush()
    }

    fn write_table(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "# {}", self.kind)?;
        for (k, v) in self.scalar_fields() {
            writeln!(out, "{k}: {v}")?;
        }
        if self.columns.is_empty() {
            return Ok(());
        }
        let mut width: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &self.rows {
            for (w, cell) in width.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &mut dyn Iterator<Item = &str>| -> String {
            let padded: Vec<String> =
                cells.zip(&width).map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
            padded.join("  ").trim_end().to_string()
        };
        writeln!(out)?;
        writeln!(out, "{}", line(&mut self.columns.iter().copied()))?;
        for r in &self.rows {
            writeln!(out, "{}", line(&mut r.iter().map(String::as_str)))?;
        }
        Ok(())
    }

    /// Fields with scalar JSON values, in key order.
    fn scalar_fields(&self) -> Vec<(String, String)> {
        self.fields
            .iter()
            .filter_map(|(k, v)| match v {
                Value::String(s) => Some((k.clone(), s.clone())),
                Value::Number(n) if n.is_f64() => Some((k.clone(), fmt_num(n.as_f64().unwrap_or(f64::NAN)))),
                Value::Number(n) => Some((k.clone(), n.to_string())),
                Value::Bool(b) => Some((k.clone(), b.to_string())),
                Value::Null => Some((k.clone(), "null".into())),
                _ => None,
            })
            .collect()
    }
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// 12 significant digits, positional in a moderate range and scientific
/// outside it, without trailing zeros.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let r = round12(x);
    if (1e-4..1e12).contains(&r.abs()) {
        return r.to_string();
    }
    let s = format!("{r:.11e}");
    let (mantissa, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
    format!("{mantissa}e{exp}")
}

pub fn num(x: f64) -> Value {
    Number::from_f64(round12(x)).map(Value::Number).unwrap_or(Value::Null)
}

pub fn opt_num(x: Option<f64>) -> Value {
    x.map(num).unwrap_or(Value::Null)
}

pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_num).unwrap_or_else(|| "null".into())
}

pub fn exact(x: &QScalar) -> Value {
    Value::from(format_scalar(x))
}

/// Short form for monomials `c q^k`, e.g. `q^-4` or `-2*q^3`; anything else
/// falls back to the canonical grammar. Both forms parse to the same value.
pub fn pretty(x: &QScalar) -> String {
    if x.is_zero() {
        return "0".into();
    }
    if let Some((c, half)) = x.as_ratfunc().as_ref().and_then(|r| r.as_monomial().map(|(c, h)| (c.clone(), h))) {
        let power = if half % 2 == 0 { format!("q^{}", half / 2) } else { format!("q^({half}/2)") };
        let coeff = if c.is_integer() { c.numer().to_string() } else { format!("{}/{}", c.numer(), c.denom()) };
        return match (half, coeff.as_str()) {
            (0, _) => coeff,
            (_, "1") => power,
            (_, "-1") => format!("-{power}"),
            _ => format!("{coeff}*{power}"),
        };
    }
    format_scalar(x)
}
