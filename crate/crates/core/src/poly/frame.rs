use std::collections::HashMap;

use crate::error::{Error, Result};

/// Ordered list of distinct variable names; index `i` names variable `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariableFrame {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableFrame {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut frame = VariableFrame {
            names: Vec::new(),
            index: HashMap::new(),
        };
        for name in names {
            frame.push(name.into())?;
        }
        Ok(frame)
    }

    fn push(&mut self, name: String) -> Result<()> {
        if !is_identifier(&name) {
            return Err(Error::InvalidVariable(name));
        }
        if self.index.contains_key(&name) {
            return Err(Error::DuplicateVariable(name));
        }
        self.index.insert(name.clone(), self.names.len());
        self.names.push(name);
        Ok(())
    }

    /// `x1, ..., xn`.
    pub fn standard(n: usize) -> Self {
        Self::block("x", 1, n)
    }

    /// `{prefix}{start}, ..., {prefix}{start + n - 1}`.
    pub fn block(prefix: &str, start: usize, n: usize) -> Self {
        Self::new((start..start + n).map(|i| format!("{prefix}{i}")))
            .expect("generated names are distinct identifiers")
    }

    /// This frame followed by `more`.
    pub fn extended<S: Into<String>>(&self, more: impl IntoIterator<Item = S>) -> Result<Self> {
        let mut out = self.clone();
        for name in more {
            out.push(name.into())?;
        }
        Ok(out)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}
