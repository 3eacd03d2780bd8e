//! Text format for polynomial maps:
//!
//! ```text
//! # comment
//! vars: x1 x2
//! F1 = x1 + x2^3
//! F2 = x2
//! ```

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::poly::{parse, print, PolyMap, Polynomial, VariableFrame};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFile {
    pub comments: Vec<String>,
    pub frame: VariableFrame,
    pub entries: Vec<(String, Polynomial)>,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::MapFile { line, msg: msg.into() }
}

impl MapFile {
    pub fn from_map(frame: VariableFrame, prefix: &str, map: &PolyMap) -> Self {
        let entries = map
            .components()
            .iter()
            .enumerate()
            .map(|(i, c)| (format!("{prefix}{}", i + 1), c.clone()))
            .collect();
        MapFile { comments: Vec::new(), frame, entries }
    }

    pub fn from_poly(frame: VariableFrame, name: &str, f: &Polynomial) -> Self {
        MapFile {
            comments: Vec::new(),
            frame,
            entries: vec![(name.to_string(), f.clone())],
        }
    }

    pub fn with_comment(mut self, c: impl Into<String>) -> Self {
        self.comments.push(c.into());
        self
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut frame: Option<VariableFrame> = None;
        let mut entries: Vec<(String, Polynomial)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some(frame) = &frame else {
                let names = line
                    .strip_prefix("vars:")
                    .ok_or_else(|| err(line_no, "expected `vars:` declaration"))?;
                let names: Vec<&str> = names.split_whitespace().collect();
                if names.is_empty() {
                    return Err(err(line_no, "no variables declared"));
                }
                frame = Some(VariableFrame::new(names).map_err(|e| err(line_no, e.to_string()))?);
                continue;
            };
            let (name, expr) = line
                .split_once('=')
                .ok_or_else(|| err(line_no, "expected `Name = expression`"))?;
            let name = name.trim();
            if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(err(line_no, format!("invalid component name `{name}`")));
            }
            if entries.iter().any(|(n, _)| n == name) {
                return Err(err(line_no, format!("duplicate component `{name}`")));
            }
            let p = parse(expr, frame).map_err(|e| err(line_no, e.to_string()))?;
            entries.push((name.to_string(), p));
        }
        let frame = frame.ok_or_else(|| err(0, "missing `vars:` declaration"))?;
        Ok(MapFile { comments: Vec::new(), frame, entries })
    }

    pub fn to_map(&self) -> Result<PolyMap> {
        PolyMap::new(self.frame.len(), self.entries.iter().map(|(_, p)| p.clone()).collect())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        let _ = writeln!(out, "vars: {}", self.frame.names().join(" "));
        for (name, p) in &self.entries {
            let _ = writeln!(out, "{name} = {}", print(p, &self.frame));
        }
        out
    }
}
