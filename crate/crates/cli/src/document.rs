//! The serialized report for one Cartan type.

use serde::{Deserialize, Serialize};
use ucomp_core::rootsys::node_name;
use ucomp_core::{AuReport, RootSystem, TripleRecord};

use crate::error::{CliError, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Fields serialize in declaration order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub cartan_type: String,
    pub good_primes_note: String,
    pub reports: Vec<ReportEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    /// Labels on the simple roots in Bourbaki order.
    pub diagram: Vec<u8>,
    pub group: String,
    pub orders: Vec<i64>,
    pub classes: Vec<ClassEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassEntry {
    /// Extended nodes in `J`, named `a1`, .., `a0`.
    pub nodes: Vec<String>,
    pub pseudo_levi: String,
    /// Distinguished labels on `J`, in node order.
    pub labels: Vec<u8>,
    /// Associated cocharacter in fundamental-coweight coordinates.
    pub cocharacter: Vec<i64>,
    pub order: i64,
}

impl ReportEntry {
    pub fn diagram_string(&self) -> String {
        self.diagram.iter().map(|l| l.to_string()).collect()
    }
}

pub fn good_primes_note(rs: &RootSystem) -> String {
    let bad = rs.bad_primes();
    if bad.is_empty() {
        format!("valid in characteristic 0 and every prime; {} has no bad primes", rs.ctype())
    } else {
        let list: Vec<String> = bad.iter().map(|p| p.to_string()).collect();
        format!(
            "valid in characteristic 0 and every good prime; bad primes for {}: {}",
            rs.ctype(),
            list.join(", ")
        )
    }
}

fn class_entry(rs: &RootSystem, t: &TripleRecord) -> Result<ClassEntry> {
    let cocharacter = t.lam.to_ints().ok_or_else(|| {
        CliError::Core(ucomp_core::Error::Invariant(format!(
            "non-integral cocharacter for {}",
            t.describe(rs.rank())
        )))
    })?;
    Ok(ClassEntry {
        nodes: t.nodes.iter().map(|i| node_name(rs.rank(), i)).collect(),
        pseudo_levi: t.type_label(),
        labels: t.labels.clone(),
        cocharacter,
        order: t.order,
    })
}

pub fn build_document(rs: &RootSystem, reports: &[AuReport]) -> Result<ReportDocument> {
    let reports = reports
        .iter()
        .map(|r| {
            Ok(ReportEntry {
                diagram: r.diagram.labels().to_vec(),
                group: r.group.to_string(),
                orders: r.orders(),
                classes: r
                    .classes
                    .iter()
                    .map(|t| class_entry(rs, t))
                    .collect::<Result<_>>()?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        cartan_type: rs.ctype().to_string(),
        good_primes_note: good_primes_note(rs),
        reports,
    })
}

/// Pretty JSON with a trailing newline; identical documents give identical bytes.
pub fn to_json(doc: &ReportDocument) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc).map_err(|e| CliError::Serialize(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(text: &str) -> Result<ReportDocument> {
    serde_json::from_str(text).map_err(|e| CliError::Serialize(e.to_string()))
}
