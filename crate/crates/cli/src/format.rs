//! CSV and JSON renderings. JSON numbers are decimal strings so values
//! beyond 64 bits survive any consumer.

use std::fmt::Display;

use borel_core::Histogram;
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// Comma-separated lines, or plain text for reports.
    #[value(alias = "text")]
    Csv,
    Json,
}

pub fn rows_csv<T: Display>(rows: &[Vec<T>]) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

pub fn rows_json<T: Display>(rows: &[Vec<T>]) -> String {
    let v: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect();
    let mut s = serde_json::to_string(&v).expect("strings serialize");
    s.push('\n');
    s
}

pub fn rows<T: Display>(rows: &[Vec<T>], format: Format) -> String {
    match format {
        Format::Csv => rows_csv(rows),
        Format::Json => rows_json(rows),
    }
}

/// `value,count` lines, or a JSON object keyed by value.
pub fn histogram(h: &Histogram, format: Format) -> String {
    match format {
        Format::Csv => h.iter().map(|(v, c)| format!("{v},{c}\n")).collect(),
        Format::Json => {
            let map: serde_json::Map<String, Value> = h
                .iter()
                .map(|(v, c)| (v.to_string(), json!(c.to_string())))
                .collect();
            format!("{}\n", Value::Object(map))
        }
    }
}

/// One item per line, or a JSON array of strings.
pub fn lines<T: Display>(items: &[T], format: Format) -> String {
    match format {
        Format::Csv => items.iter().map(|i| format!("{i}\n")).collect(),
        Format::Json => {
            let v: Vec<String> = items.iter().map(ToString::to_string).collect();
            format!(
                "{}\n",
                serde_json::to_string(&v).expect("strings serialize")
            )
        }
    }
}
