//! Machine-readable run reports.
//!
//! Reports serialize to versioned JSON. Everything outside `meta` is a
//! deterministic function of the command line and configuration; `meta`
//! carries the timestamp and runtime and is excluded from golden
//! comparisons.

use serde::Serialize;

#[derive(Serialize, Clone, Debug)]
pub struct Report {
    pub schema: &'static str,
    pub command: Vec<String>,
    pub results: Vec<ResultEntry>,
    pub diagnostics: Diagnostics,
    pub meta: Meta,
}

#[derive(Serialize, Clone, Debug, Default)]
pub struct ResultEntry {
    pub label: String,
    pub value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Serialize, Clone, Debug, Default)]
pub struct Diagnostics {
    pub digits: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<u64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
}

#[derive(Serialize, Clone, Debug, Default)]
pub struct Meta {
    pub timestamp: String,
    pub runtime_ms: u128,
}

impl Report {
    pub fn new(command: &[String], digits: u32) -> Report {
        Report {
            schema: "orbivol.report/1",
            command: command.to_vec(),
            results: Vec::new(),
            diagnostics: Diagnostics { digits, ..Default::default() },
            meta: Meta::default(),
        }
    }

    pub fn push(&mut self, entry: ResultEntry) {
        self.results.push(entry);
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.diagnostics.notes.push(s.into());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let width = self.results.iter().map(|r| r.label.len()).max().unwrap_or(0);
        for r in &self.results {
            out.push_str(&format!("{:width$}  {}", r.label, r.value));
            if let Some(e) = &r.error_bound {
                out.push_str(&format!("  (± {e})"));
            }
            if let Some(c) = r.cutoff {
                out.push_str(&format!("  [cutoff {c}]"));
            }
            if let Some(n) = &r.note {
                out.push_str(&format!("  -- {n}"));
            }
            out.push('\n');
        }
        for n in &self.diagnostics.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out
    }
}
