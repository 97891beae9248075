//! `lg`: compute colored Links–Gould invariants, run verification suites and
//! produce census tables.
//!
//! Exit codes: 0 on success, 1 on bad input or any other error, 2 when an
//! identity between independently computed quantities is violated.

mod cache;
mod suites;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use lg_core::braid::{builtin_knot_table, load_knot_table, BraidWord, KnotRecord};
use lg_core::colored::{lg_to_v, t_span, v_to_lg, ColoredError, InvariantEngine};
use lg_core::laurent::{LaurentError, LaurentPoly};
use rayon::prelude::*;
use serde::Serialize;

use cache::Cache;
use suites::Suite;

#[derive(Parser)]
#[command(name = "lg", version, about = "Colored Links-Gould invariants of knots from braid words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one invariant of one knot and print it as a JSON line.
    Compute {
        /// A knot name or alias from the table, or a braid word "n | w1 w2 ...".
        #[arg(long)]
        knot: String,
        #[arg(long, value_enum)]
        invariant: Invariant,
        /// `cable` extracts the second invariant from a cable; `both` computes
        /// both routes and fails if they differ.
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
        /// Output variables; defaults to those of the invariant.
        #[arg(long, value_enum)]
        vars: Option<Vars>,
        /// Knot table for name lookup (JSON lines); the shipped table by default.
        #[arg(long)]
        knots: Option<PathBuf>,
    },
    /// Run a verification suite and write a JSON-lines report.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long)]
        knots: Option<PathBuf>,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Knots with more crossings are skipped by the cabling suites.
        #[arg(long, default_value_t = 5)]
        cabling_max_crossings: u32,
        /// Report destination (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute LG1, LG2 and V2 for every knot of a table.
    Table {
        #[arg(long)]
        knots: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        max_crossings: Option<u32>,
        /// Recompute entries that are already cached.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Invariant {
    Lg1,
    Lg2,
    V1,
    V2,
}

impl Invariant {
    fn color(self) -> i32 {
        match self {
            Invariant::Lg1 | Invariant::V1 => 1,
            Invariant::Lg2 | Invariant::V2 => 2,
        }
    }

    fn native_vars(self) -> Vars {
        match self {
            Invariant::Lg1 | Invariant::Lg2 => Vars::Lg,
            Invariant::V1 | Invariant::V2 => Vars::V,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Method {
    Direct,
    Cable,
    Both,
}

/// `lg`: `(s, q)` with `s = q^α`.  `v`: `(t, h)` with `h = q̃^{1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Vars {
    Lg,
    V,
}

/// An identity between independent computations failed.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
struct Violation(String);

#[derive(Serialize)]
struct ComputeLine<'a> {
    knot: &'a str,
    braid: String,
    invariant: Invariant,
    method: Method,
    vars: Vars,
    poly: &'a LaurentPoly,
}

#[derive(Serialize)]
struct Spans {
    lg1: i32,
    lg2: i32,
    v2: i32,
}

#[derive(Serialize)]
struct TableLine<'a> {
    name: &'a str,
    braid: String,
    lg1: LaurentPoly,
    lg2: LaurentPoly,
    v2: LaurentPoly,
    spans: Spans,
    #[serde(skip_serializing_if = "Option::is_none")]
    genus: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sharp: Option<bool>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.chain().any(|c| c.is::<Violation>() || matches!(c.downcast_ref(), Some(ColoredError::IdentityViolated { .. })))
            {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn dispatch(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Compute { knot, invariant, method, vars, knots } => {
            compute(&knot, invariant, method, vars.unwrap_or(invariant.native_vars()), knots)
        }
        Command::Verify { suite, knots, jobs, cabling_max_crossings, out } => {
            verify(suite, knots, jobs, cabling_max_crossings, out)
        }
        Command::Table { knots, out, max_crossings, force, jobs } => table(knots, out, max_crossings, force, jobs),
    }
}

fn load_table(path: Option<&PathBuf>) -> Result<Vec<KnotRecord>> {
    match path {
        Some(p) => load_knot_table(p).with_context(|| format!("loading {}", p.display())),
        None => Ok(builtin_knot_table()),
    }
}

/// A braid word if the argument contains `|`, otherwise a table lookup.
fn resolve_knot(arg: &str, table: Option<&PathBuf>) -> Result<(String, BraidWord)> {
    if arg.contains('|') {
        let b: BraidWord = arg.parse().with_context(|| format!("parsing braid {arg:?}"))?;
        return Ok((arg.trim().to_string(), b));
    }
    let rec = load_table(table)?
        .into_iter()
        .find(|r| r.matches(arg))
        .ok_or_else(|| anyhow!("unknown knot {arg:?}"))?;
    Ok((rec.name, rec.braid))
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        if j == 0 {
            bail!("--jobs must be positive");
        }
        builder = builder.num_threads(j);
    }
    builder.build().context("starting worker threads")
}

/// Failures of the cable extraction mean the cabling identity does not hold
/// for the given data; report them as violations.
fn extraction(r: Result<LaurentPoly, ColoredError>) -> Result<LaurentPoly> {
    r.map_err(|e| match e {
        ColoredError::Laurent(LaurentError::NotDivisible | LaurentError::OddExponent) => {
            anyhow::Error::new(Violation(format!("cable extraction is not a Laurent polynomial: {e}")))
        }
        other => other.into(),
    })
}

fn compute_native(engine: &InvariantEngine, b: &BraidWord, inv: Invariant, cable: bool) -> Result<LaurentPoly> {
    Ok(match (inv, cable) {
        (Invariant::Lg1, false) => engine.lg1(b)?,
        (Invariant::V1, false) => engine.v1(b)?,
        (Invariant::Lg2, false) => engine.lg2_direct(b)?,
        (Invariant::V2, false) => lg_to_v(&engine.lg2_direct(b)?, 2)?,
        (Invariant::Lg2, true) => extraction(engine.lg2_via_cable(b))?,
        (Invariant::V2, true) => extraction(engine.v2_via_cable(b))?,
        (Invariant::Lg1 | Invariant::V1, true) => {
            bail!("{} has no cable route; use --method direct", inv.to_possible_value().expect("no skipped variants").get_name())
        }
    })
}

fn compute(arg: &str, inv: Invariant, method: Method, vars: Vars, table: Option<PathBuf>) -> Result<ExitCode> {
    let (name, braid) = resolve_knot(arg, table.as_ref())?;
    let engine = InvariantEngine::new()?;
    let native = match method {
        Method::Direct => compute_native(&engine, &braid, inv, false)?,
        Method::Cable => compute_native(&engine, &braid, inv, true)?,
        Method::Both => {
            let direct = compute_native(&engine, &braid, inv, false)?;
            let cable = compute_native(&engine, &braid, inv, true)?;
            if direct != cable {
                return Err(Violation(format!("{name}: direct {direct} differs from cable {cable}")).into());
            }
            direct
        }
    };
    let poly = match (inv.native_vars(), vars) {
        (a, b) if a == b => native,
        (Vars::Lg, Vars::V) => lg_to_v(&native, inv.color())?,
        (Vars::V, _) => v_to_lg(&native, inv.color()),
        (Vars::Lg, Vars::Lg) => unreachable!(),
    };
    let line = ComputeLine { knot: &name, braid: braid.to_string(), invariant: inv, method, vars, poly: &poly };
    println!("{}", serde_json::to_string(&line)?);
    Ok(ExitCode::SUCCESS)
}

fn verify(suite: Suite, knots: Option<PathBuf>, jobs: Option<usize>, cabling_max: u32, out: Option<PathBuf>) -> Result<ExitCode> {
    let table = load_table(knots.as_ref())?;
    // the (2,0) parallel doubles the strand count; keep the state space small
    let cabling: Vec<KnotRecord> =
        table.iter().filter(|k| k.crossings <= cabling_max && k.braid.strands() <= 3).cloned().collect();
    let engine = InvariantEngine::new()?;
    let records = pool(jobs)?.install(|| suites::run(suite, &engine, &table, &cabling));
    let mut sink: Box<dyn Write> = match &out {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for r in &records {
        writeln!(sink, "{}", serde_json::to_string(r)?)?;
    }
    sink.flush()?;
    let failed = records.iter().filter(|r| !r.pass).count();
    eprintln!("{} checks, {failed} failed", records.len());
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(2) })
}

fn table_line<'a>(engine: &InvariantEngine, cache: &Cache, k: &'a KnotRecord) -> Result<TableLine<'a>> {
    let lg1 = cache.get_or_compute("lg1", &k.braid, || Ok(engine.lg1(&k.braid)?))?;
    let lg2 = cache.get_or_compute("lg2", &k.braid, || Ok(engine.lg2_direct(&k.braid)?))?;
    let v2 = lg_to_v(&lg2, 2)?;
    let spans = Spans { lg1: lg1.s_span(), lg2: lg2.s_span(), v2: t_span(&v2) };
    let sharp = k.genus.map(|g| spans.v2 == 4 * g as i32);
    Ok(TableLine { name: &k.name, braid: k.braid.to_string(), lg1, lg2, v2, spans, genus: k.genus, sharp })
}

fn table(knots: Option<PathBuf>, out: PathBuf, max_crossings: Option<u32>, force: bool, jobs: Option<usize>) -> Result<ExitCode> {
    let rows: Vec<KnotRecord> = load_table(knots.as_ref())?
        .into_iter()
        .filter(|k| max_crossings.is_none_or(|m| k.crossings <= m))
        .collect();
    let cache = Cache::new(std::env::var_os("LG_CACHE_DIR").map(PathBuf::from), force)?;
    let engine = InvariantEngine::new()?;
    let pool = pool(jobs)?;
    let mut sink = BufWriter::new(File::create(&out).with_context(|| format!("creating {}", out.display()))?);
    // Work in batches of one knot per thread and flush after each batch, so
    // an interrupted run leaves every completed line on disk, in order.
    let batch = pool.current_num_threads().max(1);
    for chunk in rows.chunks(batch) {
        let lines: Vec<Result<String>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|k| {
                    let line = table_line(&engine, &cache, k).with_context(|| format!("knot {}", k.name))?;
                    Ok(serde_json::to_string(&line)?)
                })
                .collect()
        });
        for line in lines {
            writeln!(sink, "{}", line?)?;
        }
        sink.flush()?;
    }
    eprintln!("{} knots written to {}", rows.len(), out.display());
    Ok(ExitCode::SUCCESS)
}
