//! Output envelopes and the three renderings of a result.

use std::fmt::Write as _;

use clap::ValueEnum;
use permorder::{Count, Exact};
use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = "permorder";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

/// A fully materialized result, ready to be written in any format.
pub struct Rendered {
    pub json: Value,
    pub csv: String,
    pub text: String,
    /// Set when a verification found a failing case; maps to exit code 1.
    pub failed: bool,
}

impl Rendered {
    pub fn new(result: &impl Serialize, csv: String, text: String) -> Self {
        Rendered {
            json: serde_json::to_value(result).expect("results serialize"),
            csv,
            text,
            failed: false,
        }
    }

    pub fn failed(mut self, failed: bool) -> Self {
        self.failed = failed;
        self
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    result: &'a Value,
}

pub fn write(format: Format, command: &str, rendered: &Rendered) -> String {
    match format {
        Format::Json => {
            let envelope = Envelope {
                tool: TOOL,
                version: VERSION,
                command,
                result: &rendered.json,
            };
            let mut s = serde_json::to_string(&envelope).expect("envelope serializes");
            s.push('\n');
            s
        }
        Format::Csv => rendered.csv.clone(),
        Format::Text => rendered.text.clone(),
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: &'a str,
}

#[derive(Serialize)]
struct ErrorEnvelope<'a> {
    tool: &'static str,
    version: &'static str,
    command: &'a str,
    error: ErrorBody<'a>,
}

pub fn error_message(format: Format, command: &str, kind: &str, message: &str) -> String {
    match format {
        Format::Json => {
            let envelope = ErrorEnvelope {
                tool: TOOL,
                version: VERSION,
                command,
                error: ErrorBody { kind, message },
            };
            serde_json::to_string(&envelope).expect("error serializes")
        }
        Format::Csv | Format::Text => format!("error ({kind}): {message}"),
    }
}

/// Rational as `{"num": "...", "den": "..."}`.
#[derive(Debug, Clone, Serialize)]
pub struct Rational {
    pub num: String,
    pub den: String,
}

impl From<&Exact> for Rational {
    fn from(q: &Exact) -> Self {
        Rational {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

pub fn count_str(c: &Count) -> String {
    c.to_string()
}

/// Two-column CSV from key/value pairs.
pub fn key_value_csv<K: ToString, V: ToString>(header: (&str, &str), rows: impl IntoIterator<Item = (K, V)>) -> String {
    let mut out = format!("{},{}\n", header.0, header.1);
    for (k, v) in rows {
        let _ = writeln!(out, "{},{}", csv_field(&k.to_string()), csv_field(&v.to_string()));
    }
    out
}

/// Quotes a field if it holds a comma, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

pub fn rows_text(rows: &[Vec<usize>]) -> String {
    rows.iter().map(|r| join(r, " ")).collect::<Vec<_>>().join("\n")
}
