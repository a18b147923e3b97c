use clap::ValueEnum;
use serde_json::{Map, Value};
use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Text(String),
    Empty,
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_owned())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

/// Shortest decimal that parses back to the same `f64`, switching to
/// exponent form for very small or very large magnitudes.
pub fn fmt_num(v: f64) -> String {
    let m = v.abs();
    if v != 0.0 && m.is_finite() && !(1e-4..1e16).contains(&m) {
        format!("{v:e}")
    } else {
        format!("{v}")
    }
}

impl Cell {
    fn text(&self) -> String {
        match self {
            Cell::Num(v) => fmt_num(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            // serde_json writes the shortest round-trip form as well
            Cell::Num(v) => serde_json::Number::from_f64(*v).map_or(Value::Null, Value::Number),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::from(s.as_str()),
            Cell::Empty => Value::Null,
        }
    }
}

/// A header, rows of cells, and optional summary entries.
#[derive(Debug, Default)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    pub footer: Vec<(&'static str, Cell)>,
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table {
            columns,
            ..Table::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: OutputFormat, out: &mut impl Write) -> io::Result<()> {
        match format {
            OutputFormat::Plain => self.write_plain(out),
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Json => self.write_json(out),
        }
    }

    fn write_plain(&self, out: &mut impl Write) -> io::Result<()> {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::text).collect()).collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |out: &mut dyn Write, items: &[String]| -> io::Result<()> {
            let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            writeln!(out, "{}", padded.join("  ").trim_end())
        };
        let header: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
        line(out, &header)?;
        for row in &cells {
            line(out, row)?;
        }
        for (key, value) in &self.footer {
            writeln!(out, "{key}: {}", value.text())?;
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut impl Write) -> io::Result<()> {
        {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(&self.columns)?;
            for row in &self.rows {
                w.write_record(row.iter().map(Cell::text))?;
            }
            w.flush()?;
        }
        if !self.footer.is_empty() {
            let parts: Vec<String> = self.footer.iter().map(|(k, v)| format!("{k}={}", v.text())).collect();
            writeln!(out, "# {}", parts.join(","))?;
        }
        Ok(())
    }

    fn write_json(&self, out: &mut impl Write) -> io::Result<()> {
        for row in &self.rows {
            let obj: Map<String, Value> = self
                .columns
                .iter()
                .zip(row)
                .map(|(c, v)| (c.to_string(), v.json()))
                .collect();
            writeln!(out, "{}", Value::Object(obj))?;
        }
        if !self.footer.is_empty() {
            let summary: Map<String, Value> = self.footer.iter().map(|(k, v)| (k.to_string(), v.json())).collect();
            let mut obj = Map::new();
            obj.insert("summary".into(), Value::Object(summary));
            writeln!(out, "{}", Value::Object(obj))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for v in [
            2.772588722239781,
            1e-6,
            0.1 + 0.2,
            1.0,
            123456.789,
            5.75e-16,
            1e20,
            -3.5e-5,
        ] {
            let s = fmt_num(v);
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert_eq!(fmt_num(1e-6), "1e-6");
        assert_eq!(fmt_num(0.25), "0.25");
        assert_eq!(fmt_num(0.0), "0");
    }

    fn sample() -> Table {
        let mut t = Table::new(vec!["name", "value"]);
        t.push(vec!["a,b".into(), 0.5.into()]);
        t.push(vec!["c".into(), Cell::Empty]);
        t.footer.push(("min", 0.5.into()));
        t
    }

    #[test]
    fn csv_quotes_and_footer() {
        let mut buf = Vec::new();
        sample().write(OutputFormat::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "name,value\n\"a,b\",0.5\nc,\n# min=0.5\n");
    }

    #[test]
    fn json_lines() {
        let mut buf = Vec::new();
        sample().write(OutputFormat::Json, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], r#"{"name":"a,b","value":0.5}"#);
        assert_eq!(lines[1], r#"{"name":"c","value":null}"#);
        assert_eq!(lines[2], r#"{"summary":{"min":0.5}}"#);
    }

    #[test]
    fn plain_aligns() {
        let mut buf = Vec::new();
        sample().write(OutputFormat::Plain, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "name  value\na,b   0.5\nc\nmin: 0.5\n");
    }
}
