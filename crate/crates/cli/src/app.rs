//! Argument parsing and the three subcommands.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use log::info;
use ucomp_core::canon::DEFAULT_BUDGET;
use ucomp_core::oracle::{verify_reports, DEFAULT_ORACLE_RANK};
use ucomp_core::pseudolevi::enumerate_pseudolevis_with_budget;
use ucomp_core::{
    alcove_reduce, build_root_system, component_group_report_in_char,
    component_group_report_with_budget, is_good_prime, witness_element, AuReport, CartanType,
    RootSystem,
};

use crate::cache::Cache;
use crate::config::Config;
use crate::document::{build_document, ReportDocument, SCHEMA_VERSION};
use crate::emit::{render, Format};
use crate::error::{CliError, Result};
use crate::names::DisplayNames;

pub const DEFAULT_MAX_RANK: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "ucomp", version)]
#[command(about = "Component groups of unipotent centralizers in simple adjoint groups")]
pub struct Cli {
    /// Defaults as `key = value` lines; flags take precedence
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    /// Log progress to stderr
    #[arg(short, long, global = true, default_value_t = false)]
    pub verbose: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root counts and bad primes of a type
    Roots {
        /// Cartan type such as E8 or B4
        cartan_type: String,
    },
    /// Pseudo-Levi subsystems up to conjugacy
    Pseudolevis {
        /// Cartan type such as E8 or B4
        cartan_type: String,
        /// Add a witness point of order prime to this characteristic
        #[arg(long)]
        witness: Option<u64>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Component group of every unipotent class
    ComponentGroups(GroupArgs),
}

#[derive(clap::Args, Debug, Default)]
pub struct GroupArgs {
    /// Cartan type such as E8 or B4
    pub cartan_type: String,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads (0 for one per core)
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Search budget for canonical forms and orbit searches
    #[arg(long)]
    pub budget: Option<u64>,
    /// Run the oracle cross-checks and fail on any mismatch
    #[arg(long, default_value_t = false)]
    pub verify: bool,
    /// Characteristic of the ground field (0 or a good prime)
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
    /// Directory for cached report documents
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Display-name table for diagrams
    #[arg(long)]
    pub names: Option<PathBuf>,
    /// Largest rank accepted without complaint (default 8)
    #[arg(long)]
    pub max_rank: Option<usize>,
}

fn parse_type(s: &str) -> Result<CartanType> {
    s.parse()
        .map_err(|e: ucomp_core::Error| CliError::Usage(e.to_string()))
}

fn io_err(e: std::io::Error) -> CliError {
    CliError::io("writing output", e)
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let config = match &cli.config {
        Some(p) => Config::load(p)?,
        None => Config::default(),
    };
    match cli.command {
        Command::Roots { cartan_type } => cmd_roots(&cartan_type, out),
        Command::Pseudolevis {
            cartan_type,
            witness,
            budget,
        } => cmd_pseudolevis(
            &cartan_type,
            witness,
            budget.or(config.budget).unwrap_or(DEFAULT_BUDGET),
            out,
        ),
        Command::ComponentGroups(args) => cmd_component_groups(args, &config, out, err),
    }
}

pub fn cmd_roots(cartan_type: &str, out: &mut dyn Write) -> Result<()> {
    let rs = build_root_system(parse_type(cartan_type)?);
    let marks: Vec<String> = rs.marks().iter().map(|m| m.to_string()).collect();
    let bad: Vec<String> = rs.bad_primes().iter().map(|p| p.to_string()).collect();
    writeln!(out, "type: {}", rs.ctype()).map_err(io_err)?;
    writeln!(out, "rank: {}", rs.rank()).map_err(io_err)?;
    writeln!(out, "positive roots: {}", rs.num_positive()).map_err(io_err)?;
    writeln!(out, "roots: {}", rs.roots().len()).map_err(io_err)?;
    writeln!(out, "highest root marks: {}", marks.join(" ")).map_err(io_err)?;
    let bad = if bad.is_empty() { "none".to_string() } else { bad.join(", ") };
    writeln!(out, "bad primes: {bad}").map_err(io_err)?;
    Ok(())
}

pub fn cmd_pseudolevis(
    cartan_type: &str,
    witness: Option<u64>,
    budget: u64,
    out: &mut dyn Write,
) -> Result<()> {
    let rs = build_root_system(parse_type(cartan_type)?);
    let n = rs.rank();
    let classes = enumerate_pseudolevis_with_budget(&rs, budget)?;
    let mut header = "#\tJ\ttype\td_J\tmembers".to_string();
    if witness.is_some() {
        header.push_str("\twitness\torder");
    }
    writeln!(out, "{header}").map_err(io_err)?;
    for (i, c) in classes.iter().enumerate() {
        let mut line = format!(
            "{}\t{}\t{}\t{}\t{}",
            i + 1,
            c.rep.nodes.display(n),
            c.rep.type_label(),
            c.rep.d_j,
            c.members.len()
        );
        if let Some(p) = witness {
            let s = witness_element(&rs, c.rep.nodes, p)?;
            let walls = alcove_reduce(&rs, &s).walls;
            if walls != c.rep.nodes {
                return Err(CliError::Verification(format!(
                    "witness {s} for {} reduces to walls {}",
                    c.rep.nodes.display(n),
                    walls.display(n)
                )));
            }
            line.push_str(&format!("\t{s}\t{}", s.torus_order()));
        }
        writeln!(out, "{line}").map_err(io_err)?;
    }
    Ok(())
}

fn compute_reports(rs: &RootSystem, characteristic: Option<u64>, budget: u64) -> Result<Vec<AuReport>> {
    Ok(match characteristic {
        Some(p) => component_group_report_in_char(rs, p, budget)?,
        None => component_group_report_with_budget(rs, budget)?,
    })
}

/// Computes (or loads) the document for one type inside a pool of `jobs` threads.
pub fn report_document(
    rs: &RootSystem,
    characteristic: Option<u64>,
    budget: u64,
    jobs: usize,
) -> Result<(ReportDocument, Vec<AuReport>)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    pool.install(|| {
        let reports = compute_reports(rs, characteristic, budget)?;
        Ok((build_document(rs, &reports)?, reports))
    })
}

pub fn cmd_component_groups(
    args: GroupArgs,
    config: &Config,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<()> {
    let ctype = parse_type(&args.cartan_type)?;
    let max_rank = args.max_rank.or(config.max_rank).unwrap_or(DEFAULT_MAX_RANK);
    if ctype.rank() > max_rank {
        return Err(CliError::Usage(format!(
            "{ctype} exceeds the maximum rank {max_rank} (raise it with --max-rank)"
        )));
    }
    let format = args.format.or(config.format).unwrap_or(Format::Json);
    let jobs = args.jobs.or(config.jobs).unwrap_or(0);
    let budget = args.budget.or(config.budget).unwrap_or(DEFAULT_BUDGET);
    let oracle_rank = config.oracle_rank.unwrap_or(DEFAULT_ORACLE_RANK);
    let names = match args.names.as_ref().or(config.names.as_ref()) {
        Some(p) => DisplayNames::parse(
            &std::fs::read_to_string(p)
                .map_err(|e| CliError::io(format!("reading names {}", p.display()), e))?,
        )?,
        None => DisplayNames::builtin(),
    };
    let rs = build_root_system(ctype);
    if let Some(p) = args.characteristic {
        if !is_good_prime(&rs, p)? {
            return Err(ucomp_core::Error::BadCharacteristic {
                p,
                ctype: ctype.to_string(),
            }
            .into());
        }
    }

    let cache = args
        .cache_dir
        .as_ref()
        .or(config.cache_dir.as_ref())
        .map(Cache::new);
    let cached = cache
        .as_ref()
        .and_then(|c| c.load(SCHEMA_VERSION, &ctype.to_string()));

    let doc = match (&cached, args.verify) {
        (Some(doc), false) => {
            info!("using cached report for {ctype}");
            doc.clone()
        }
        _ => {
            info!("computing reports for {ctype}");
            let (doc, reports) = report_document(&rs, args.characteristic, budget, jobs)?;
            if args.verify {
                verify(&rs, &doc, &reports, cached.as_ref(), oracle_rank, budget, err)?;
            }
            if let Some(c) = &cache {
                let path = c.store(&doc)?;
                info!("cached at {}", path.display());
            }
            doc
        }
    };

    let text = render(&doc, format, &names)?;
    match &args.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::io(format!("writing {}", path.display()), e))?,
        None => out.write_all(text.as_bytes()).map_err(io_err)?,
    }
    Ok(())
}

fn verify(
    rs: &RootSystem,
    doc: &ReportDocument,
    reports: &[AuReport],
    cached: Option<&ReportDocument>,
    oracle_rank: usize,
    budget: u64,
    err: &mut dyn Write,
) -> Result<()> {
    let mut checks = verify_reports(rs, reports, oracle_rank, budget)?;
    if let Some(c) = cached {
        checks.push(ucomp_core::oracle::CheckOutcome {
            name: "cache-agreement".into(),
            passed: c == doc,
            detail: "cached document against a fresh computation".into(),
        });
    }
    let mut failed = Vec::new();
    for c in &checks {
        let status = if c.passed { "ok" } else { "FAILED" };
        writeln!(err, "verify {}: {status} ({})", c.name, c.detail).map_err(io_err)?;
        if !c.passed {
            failed.push(c.name.clone());
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed.join(", ")))
    }
}
