//! Display names for diagrams, read from a plain text table. Names are only
//! shown in human-oriented output and never enter any computation.

use std::collections::HashMap;

use crate::error::{CliError, Result};

pub const BUILTIN: &str = include_str!("../data/distinguished_names.txt");

/// `(type, diagram digits) -> name`.
#[derive(Debug, Clone, Default)]
pub struct DisplayNames(HashMap<(String, String), String>);

impl DisplayNames {
    /// Lines of the form `TYPE DIGITS NAME`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut map = HashMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace();
            match (parts.next(), parts.next(), parts.next(), parts.next()) {
                (Some(t), Some(d), Some(name), None) if d.bytes().all(|b| b.is_ascii_digit()) => {
                    map.insert((t.to_ascii_uppercase(), d.to_string()), name.to_string());
                }
                _ => {
                    return Err(CliError::Usage(format!(
                        "names file line {}: expected `TYPE DIGITS NAME`",
                        no + 1
                    )))
                }
            }
        }
        Ok(DisplayNames(map))
    }

    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("bundled names parse")
    }

    pub fn get(&self, ctype: &str, diagram: &str) -> Option<&str> {
        self.0
            .get(&(ctype.to_ascii_uppercase(), diagram.to_string()))
            .map(String::as_str)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, &str)> {
        self.0
            .iter()
            .map(|((t, d), n)| (t.as_str(), d.as_str(), n.as_str()))
    }
}
