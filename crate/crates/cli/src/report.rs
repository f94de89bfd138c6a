//! Output documents and their pretty, JSON and CSV renderings.

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

/// Result of one command: a JSON document whose numbers are decimal strings,
/// a table for CSV, and the human-readable text.
#[derive(Debug, Clone)]
pub struct Report {
    pub json: Value,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub pretty: String,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Pretty => self.pretty.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values always serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory CSV write");
                for row in &self.rows {
                    w.write_record(row).expect("in-memory CSV write");
                }
                String::from_utf8(w.into_inner().expect("in-memory CSV flush")).expect("CSV is UTF-8")
            }
        }
    }
}

/// A JSON object with `kind` first followed by `fields`.
pub fn document(kind: &str, fields: Vec<(&str, Value)>) -> Value {
    let mut map = Map::new();
    map.insert("kind".into(), Value::String(kind.into()));
    for (k, v) in fields {
        map.insert(k.into(), v);
    }
    Value::Object(map)
}

pub fn s(v: impl ToString) -> Value {
    Value::String(v.to_string())
}

/// A JSON array of string rows, header first.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> Value {
    let mut out = vec![Value::Array(header.iter().map(s).collect())];
    out.extend(rows.iter().map(|r| Value::Array(r.iter().map(s).collect())));
    Value::Array(out)
}

/// Columns padded to their widest cell, the first left-aligned and the rest right-aligned.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<&str>| {
        let parts: Vec<String> = cells
            .iter()
            .enumerate()
            .map(|(c, cell)| if c == 0 { format!("{cell:<w$}", w = widths[c]) } else { format!("{cell:>w$}", w = widths[c]) })
            .collect();
        parts.join("  ").trim_end().to_string()
    };
    let mut out = String::new();
    out.push_str(&line(header.to_vec()));
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().take(cols).map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quotes_nothing_for_plain_cells() {
        let r = Report {
            json: Value::Null,
            header: vec!["m".into(), "value".into()],
            rows: vec![vec!["4".into(), "917".into()]],
            pretty: String::new(),
        };
        assert_eq!(r.render(Format::Csv), "m,value\n4,917\n");
    }

    #[test]
    fn kind_comes_first() {
        let doc = document("profile", vec![("n", s(5))]);
        let text = serde_json::to_string(&doc).unwrap();
        assert!(text.starts_with("{\"kind\":\"profile\""), "{text}");
    }

    #[test]
    fn aligned_pads_columns() {
        let out = aligned(&["m", "dim"], &[vec!["10".into(), "5".into()], vec!["4".into(), "917".into()]]);
        assert_eq!(out, "m   dim\n10    5\n4   917\n");
    }
}
