use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

/// One named result with its supporting data.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    pub summary: String,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub certificates: BTreeMap<String, Value>,
}

impl Check {
    pub fn new(name: &str, status: Status, summary: impl Into<String>) -> Check {
        Check { name: name.into(), status, summary: summary.into(), certificates: BTreeMap::new() }
    }

    pub fn info(name: &str, summary: impl Into<String>) -> Check {
        Check::new(name, Status::Info, summary)
    }

    pub fn verdict(name: &str, ok: bool, summary: impl Into<String>) -> Check {
        Check::new(name, if ok { Status::Pass } else { Status::Fail }, summary)
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Check {
        self.certificates.insert(key.into(), value.into());
        self
    }
}

/// Output of one command. Deterministic unless timing is requested.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub inputs: Vec<String>,
    pub checks: Vec<Check>,
    /// A curve produced by the command, in curve-file syntax.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub curve: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(command: &str, inputs: &[&str]) -> Report {
        Report {
            command: command.into(),
            inputs: inputs.iter().map(|s| s.to_string()).collect(),
            checks: Vec::new(),
            curve: None,
            elapsed_ms: None,
        }
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// Plain text. A produced curve follows the checks, which are then
    /// written as comments so the whole output still parses as a curve
    /// file.
    pub fn to_text(&self) -> String {
        let lead = if self.curve.is_some() { "# " } else { "" };
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "ok",
                Status::Fail => "FAIL",
                Status::Info => "--",
            };
            let _ = writeln!(out, "{lead}{:<4} {}: {}", tag, c.name, c.summary);
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "{lead}time: {ms} ms");
        }
        if let Some(curve) = &self.curve {
            out.push_str(curve);
        }
        out
    }
}
