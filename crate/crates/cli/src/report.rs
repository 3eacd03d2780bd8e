use std::time::Duration;

use polykeller_core::verify::{Outcome, PropertyReport};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

pub struct InputDigest {
    pub source: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(source: impl Into<String>, bytes: &[u8]) -> Self {
        InputDigest {
            source: source.into(),
            sha256: hex::encode(Sha256::digest(bytes)),
        }
    }
}

/// Result of one CLI invocation. JSON keys come out sorted because
/// `serde_json::Map` is ordered.
pub struct RunReport {
    pub command: Vec<String>,
    pub inputs: Vec<InputDigest>,
    pub seed: Option<u64>,
    pub verdict: Outcome,
    pub reports: Vec<Value>,
    pub output: Option<Value>,
    pub duration: Duration,
}

impl RunReport {
    pub fn new(command: Vec<String>) -> Self {
        RunReport {
            command,
            inputs: Vec::new(),
            seed: None,
            verdict: Outcome::Pass,
            reports: Vec::new(),
            output: None,
            duration: Duration::ZERO,
        }
    }

    /// Adds a property report; the run verdict is the worst seen, with fail
    /// ranking above inapplicable.
    pub fn push(&mut self, r: &PropertyReport) {
        self.absorb(r.outcome);
        self.reports.push(r.to_json());
    }

    pub fn absorb(&mut self, o: Outcome) {
        self.verdict = match (self.verdict, o) {
            (Outcome::Fail, _) | (_, Outcome::Fail) => Outcome::Fail,
            (Outcome::Inapplicable, _) | (_, Outcome::Inapplicable) => Outcome::Inapplicable,
            _ => Outcome::Pass,
        };
    }

    pub fn exit_code(&self) -> u8 {
        match self.verdict {
            Outcome::Pass => 0,
            Outcome::Fail => 1,
            Outcome::Inapplicable => 2,
        }
    }

    /// Everything except the duration.
    pub fn canonical(&self) -> Value {
        let inputs: Vec<Value> = self
            .inputs
            .iter()
            .map(|d| json!({"source": d.source, "sha256": d.sha256}))
            .collect();
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("inputs".into(), json!(inputs));
        m.insert("seed".into(), json!(self.seed));
        m.insert("verdict".into(), json!(self.verdict.as_str()));
        m.insert("reports".into(), json!(self.reports));
        if let Some(o) = &self.output {
            m.insert("output".into(), o.clone());
        }
        Value::Object(m)
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.canonical();
        v["duration_ms"] = json!(self.duration.as_millis() as u64);
        v
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("verdict: {}\n", self.verdict.as_str());
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed: {seed}\n"));
        }
        for r in &self.reports {
            render_report(r, 0, &mut out);
        }
        out
    }
}

fn render_report(r: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    let name = r["instance"].as_str().filter(|s| !s.is_empty()).or(r["property"].as_str()).unwrap_or("");
    out.push_str(&format!("{pad}{name}: {}", r["verdict"].as_str().unwrap_or("")));
    if let (Some(p), Some(t)) = (r["passed"].as_u64(), r["trials"].as_u64()) {
        out.push_str(&format!(" ({p}/{t} passed)"));
    }
    out.push('\n');
    if let Some(note) = r["note"].as_str().filter(|s| !s.is_empty()) {
        out.push_str(&format!("{pad}  note: {note}\n"));
    }
    for w in r["witnesses"].as_array().into_iter().flatten() {
        let value = match &w["value"] {
            Value::String(s) => s.clone(),
            Value::Array(items) => {
                let parts: Vec<&str> = items.iter().filter_map(Value::as_str).collect();
                format!("({})", parts.join(", "))
            }
            other => other.to_string(),
        };
        out.push_str(&format!("{pad}  {}: {value}\n", w["role"].as_str().unwrap_or("")));
    }
    if r["verdict"] != "pass" || depth == 0 {
        for sub in r["reports"].as_array().into_iter().flatten() {
            if sub["verdict"] != "pass" {
                render_report(sub, depth + 1, out);
            }
        }
    }
}
