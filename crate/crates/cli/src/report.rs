//! Report emission: one stable schema for `--json`, a readable rendering
//! otherwise. Reports are deterministic given input, seed and options.

use serde::Serialize;
use sha2::{Digest, Sha256};

#[derive(Debug, Serialize)]
pub struct ReasonJson {
    pub check: String,
    pub rule: String,
    pub outcome: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input_digest: Option<String>,
    pub seed: u64,
    pub version: String,
    pub results: serde_json::Value,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub reasons: Vec<ReasonJson>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

impl Report {
    pub fn new(command: &str, seed: u64) -> Report {
        Report {
            command: command.to_string(),
            input: None,
            input_digest: None,
            seed,
            version: env!("CARGO_PKG_VERSION").to_string(),
            results: serde_json::Value::Null,
            reasons: vec![],
            warnings: vec![],
        }
    }

    pub fn with_input(mut self, path: &std::path::Path, bytes: &[u8]) -> Report {
        self.input = Some(path.display().to_string());
        self.input_digest = Some(digest(bytes));
        self
    }

    pub fn render(&self, json: bool) -> String {
        if json {
            serde_json::to_string_pretty(self).expect("report serializes")
        } else {
            self.render_text()
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if let Some(input) = &self.input {
            out.push_str(&format!("input: {input}\n"));
        }
        if let Some(d) = &self.input_digest {
            out.push_str(&format!("digest: {d}\n"));
        }
        out.push_str(&format!("seed: {}\n", self.seed));
        out.push_str(&format!(
            "results:\n{}\n",
            indent(&serde_json::to_string_pretty(&self.results).expect("results serialize"))
        ));
        if !self.reasons.is_empty() {
            out.push_str("reasons:\n");
            for r in &self.reasons {
                out.push_str(&format!("  - {} [{}]: {}\n", r.check, r.rule, r.outcome));
            }
        }
        for w in &self.warnings {
            out.push_str(&format!("warning: {w}\n"));
        }
        out
    }
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

pub fn digest(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("{:x}", hasher.finalize())
}
