//! Optional `key = value` defaults, overridden by command-line flags.

use std::path::PathBuf;

use crate::emit::Format;
use crate::error::{CliError, Result};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Config {
    pub format: Option<Format>,
    pub jobs: Option<usize>,
    pub budget: Option<u64>,
    pub cache_dir: Option<PathBuf>,
    pub names: Option<PathBuf>,
    pub max_rank: Option<usize>,
    pub oracle_rank: Option<usize>,
}

fn value<T: std::str::FromStr>(key: &str, v: &str, line: usize) -> Result<T> {
    v.parse()
        .map_err(|_| CliError::Usage(format!("config line {line}: bad value {v:?} for {key}")))
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut c = Config::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let no = i + 1;
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("config line {no}: expected key = value")))?;
            let (k, v) = (k.trim(), v.trim());
            match k {
                "format" => c.format = Some(value(k, v, no)?),
                "jobs" => c.jobs = Some(value(k, v, no)?),
                "budget" => c.budget = Some(value(k, v, no)?),
                "cache_dir" => c.cache_dir = Some(PathBuf::from(v)),
                "names" => c.names = Some(PathBuf::from(v)),
                "max_rank" => c.max_rank = Some(value(k, v, no)?),
                "oracle_rank" => c.oracle_rank = Some(value(k, v, no)?),
                _ => return Err(CliError::Usage(format!("config line {no}: unknown key {k:?}"))),
            }
        }
        Ok(c)
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::io(format!("reading config {}", path.display()), e))?;
        Self::parse(&text)
    }
}
