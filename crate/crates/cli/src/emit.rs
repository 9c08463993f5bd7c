//! Renderings of a [`ReportDocument`] in the supported output formats.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::document::{to_json, ReportDocument};
use crate::error::{CliError, Result};
use crate::names::DisplayNames;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" | "markdown" => Ok(Format::Md),
            _ => Err(CliError::Usage(format!("unknown format {s:?}"))),
        }
    }
}

pub fn render(doc: &ReportDocument, format: Format, names: &DisplayNames) -> Result<String> {
    match format {
        Format::Json => to_json(doc),
        Format::Csv => to_csv(doc, names),
        Format::Md => Ok(to_markdown(doc, names)),
    }
}

/// One row per class, in the column order of the fields below.
#[derive(Serialize)]
struct CsvRow<'a> {
    cartan_type: &'a str,
    diagram: String,
    display_name: &'a str,
    group: &'a str,
    class_index: usize,
    nodes: String,
    pseudo_levi: &'a str,
    labels: String,
    order: i64,
}

pub fn to_csv(doc: &ReportDocument, names: &DisplayNames) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &doc.reports {
        let diagram = r.diagram_string();
        let name = names.get(&doc.cartan_type, &diagram).unwrap_or("");
        for (i, c) in r.classes.iter().enumerate() {
            w.serialize(CsvRow {
                cartan_type: &doc.cartan_type,
                diagram: diagram.clone(),
                display_name: name,
                group: &r.group,
                class_index: i,
                nodes: c.nodes.join(" "),
                pseudo_levi: &c.pseudo_levi,
                labels: c.labels.iter().map(|l| l.to_string()).collect(),
                order: c.order,
            })
            .map_err(|e| CliError::Serialize(e.to_string()))?;
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Serialize(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Serialize(e.to_string()))
}

pub fn to_markdown(doc: &ReportDocument, names: &DisplayNames) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# Component groups A(u) for {}\n", doc.cartan_type);
    let _ = writeln!(s, "Schema {}; {}.\n", doc.schema_version, doc.good_primes_note);
    let _ = writeln!(s, "| diagram | name | A(u) | orders | classes |");
    let _ = writeln!(s, "|---|---|---|---|---|");
    for r in &doc.reports {
        let diagram = r.diagram_string();
        let name = names.get(&doc.cartan_type, &diagram).unwrap_or("");
        let orders: Vec<String> = r.orders.iter().map(|o| o.to_string()).collect();
        let classes: Vec<String> = r
            .classes
            .iter()
            .map(|c| format!("{} on {{{}}} (order {})", c.pseudo_levi, c.nodes.join(","), c.order))
            .collect();
        let _ = writeln!(
            s,
            "| {diagram} | {name} | {} | {} | {} |",
            r.group,
            orders.join(", "),
            classes.join("; ")
        );
    }
    s
}
