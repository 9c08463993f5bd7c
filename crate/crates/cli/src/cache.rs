//! Content-addressed cache of report documents.

use std::fs;
use std::path::{Path, PathBuf};

use log::warn;
use sha2::{Digest, Sha256};

use crate::document::{from_json, to_json, ReportDocument};
use crate::error::{CliError, Result};

pub const CODE_VERSION: &str = concat!("ucomp-", env!("CARGO_PKG_VERSION"));

pub fn cache_key(schema_version: u32, cartan_type: &str, code_version: &str) -> String {
    let mut h = Sha256::new();
    h.update(format!("{schema_version}\n{cartan_type}\n{code_version}\n"));
    hex::encode(h.finalize())
}

pub struct Cache {
    dir: PathBuf,
    code_version: String,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache {
            dir: dir.into(),
            code_version: CODE_VERSION.to_string(),
        }
    }

    pub fn with_code_version(mut self, tag: &str) -> Self {
        self.code_version = tag.to_string();
        self
    }

    pub fn path(&self, schema_version: u32, cartan_type: &str) -> PathBuf {
        self.dir
            .join(cache_key(schema_version, cartan_type, &self.code_version))
            .with_extension("json")
    }

    pub fn store(&self, doc: &ReportDocument) -> Result<PathBuf> {
        fs::create_dir_all(&self.dir)
            .map_err(|e| CliError::io(format!("creating {}", self.dir.display()), e))?;
        let path = self.path(doc.schema_version, &doc.cartan_type);
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, to_json(doc)?)
            .map_err(|e| CliError::io(format!("writing {}", tmp.display()), e))?;
        fs::rename(&tmp, &path).map_err(|e| CliError::io(format!("writing {}", path.display()), e))?;
        Ok(path)
    }

    /// The cached document for an exact key match. Unreadable or mismatched
    /// entries are reported and treated as a miss.
    pub fn load(&self, schema_version: u32, cartan_type: &str) -> Option<ReportDocument> {
        let path = self.path(schema_version, cartan_type);
        let text = match fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return None,
            Err(e) => {
                warn!("ignoring unreadable cache entry {}: {e}", path.display());
                return None;
            }
        };
        match from_json(&text) {
            Ok(doc) if doc.schema_version == schema_version && doc.cartan_type == cartan_type => {
                Some(doc)
            }
            Ok(_) => {
                warn!("ignoring mismatched cache entry {}", path.display());
                None
            }
            Err(e) => {
                warn!("ignoring corrupt cache entry {}: {e}", path.display());
                None
            }
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }
}
