//! Report envelope and plain-text helpers shared by all subcommands.

use clap::ValueEnum;
use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Agreement between a derived result and the published statement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Agreement {
    pub agrees: bool,
    pub note: String,
}

/// Top-level JSON object. Field names are frozen, see `docs/json-schema.md`.
#[derive(Debug, Clone, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportEnvelope {
    pub command: &'static str,
    pub inputs: Value,
    pub results: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub paper_agreement: Option<Agreement>,
    pub version: &'static str,
}

impl ReportEnvelope {
    pub fn new(command: &'static str, inputs: impl Serialize, results: impl Serialize) -> Self {
        Self {
            command,
            inputs: to_value(inputs),
            results: to_value(results),
            paper_agreement: None,
            version: env!("CARGO_PKG_VERSION"),
        }
    }

    pub fn with_agreement(mut self, agreement: Option<Agreement>) -> Self {
        self.paper_agreement = agreement;
        self
    }
}

fn to_value(v: impl Serialize) -> Value {
    // Report types are plain data with string keys; serialization cannot fail.
    serde_json::to_value(v).expect("report serializes to JSON")
}

/// A finished command: what to print and how to exit.
pub struct Outcome {
    pub envelope: ReportEnvelope,
    pub text: String,
    pub code: i32,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope)
                    .expect("envelope serializes to JSON");
                s.push('\n');
                s
            }
        }
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c:<w$}"))
            .collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(headers.to_vec());
    for row in rows {
        out += &line(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_aligns_columns() {
        let t = table(&["a", "bb"], &[vec!["xxx".into(), "y".into()]]);
        assert_eq!(t, "a    bb\nxxx  y\n");
    }

    #[test]
    fn envelope_field_order_is_fixed() {
        let env = ReportEnvelope::new("x", serde_json::json!({"n": 1}), 5).with_agreement(Some(
            Agreement {
                agrees: true,
                note: String::new(),
            },
        ));
        let s = serde_json::to_string(&env).unwrap();
        let keys = [
            "\"command\"",
            "\"inputs\"",
            "\"results\"",
            "\"paperAgreement\"",
            "\"version\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn agreement_is_omitted_when_absent() {
        let env = ReportEnvelope::new("x", 1, 2);
        assert!(!serde_json::to_string(&env)
            .unwrap()
            .contains("paperAgreement"));
    }
}
