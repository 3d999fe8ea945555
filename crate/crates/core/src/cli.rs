//! The `flechains` command line.
//!
//! Exit status is 0 when every check passes, 1 when some check reports a
//! violation and 2 for usage, file and parse errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};

use crate::bunch::{
    algebras_to_groups, check_derive_decompose, decompose_chain, derive_chain, groups_to_algebras, validate_bunch_algebras,
    validate_bunch_groups, verify_main_theorem, BunchOfLayerGroups,
};
use crate::chain::{classify_parity, run_law_suite, run_law_suite_exhaustive, Chain, FiniteChainTable, Parity};
use crate::dsl::{parse_bunch_dsl, BunchDocument};
use crate::emit::{carrier, emit_table};
use crate::oracle::{count_line, cross_check, SearchConfig};
use crate::report::Report;
use crate::sampling::Sampling;

#[derive(Debug, Parser)]
#[command(name = "flechains", version, about = "Build, decompose and check involutive FLe-chains")]
pub struct Cli {
    /// Seed for every sampled check.
    #[arg(long, global = true, default_value_t = Sampling::default().seed)]
    pub seed: u64,
    /// Samples per sampled law.
    #[arg(long, global = true, default_value_t = Sampling::default().samples)]
    pub samples: usize,
    /// Radius of the window sampled elements are drawn from.
    #[arg(long, global = true, default_value_t = Sampling::default().window, allow_negative_numbers = true)]
    pub window: i64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a bunch description and run the law suite on its chain.
    Check { bunch: PathBuf },
    /// Build the chain of a bunch description.
    Derive {
        bunch: PathBuf,
        /// Print the product table of the chain (or of its window).
        #[arg(long)]
        emit_table: bool,
    },
    /// Split a finite chain table into layers and recover its group bunch.
    Decompose { table: PathBuf },
    /// Enumerate every chain of a given size and cross-check it.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// odd, even-idempotent-f, even-nonidempotent-f or any.
        #[arg(long, value_parser = parse_parity)]
        parity: Option<ParityFilter>,
    },
    /// Verify every round trip between a bunch and its chain.
    Roundtrip { bunch: PathBuf },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityFilter {
    Only(Parity),
    Any,
}

fn parse_parity(s: &str) -> Result<ParityFilter, String> {
    if s == "any" {
        return Ok(ParityFilter::Any);
    }
    Parity::from_name(s)
        .map(ParityFilter::Only)
        .ok_or_else(|| format!("unknown parity `{s}` (expected odd, even-idempotent-f, even-nonidempotent-f or any)"))
}

/// A failure that stops a command before any check ran.
struct Usage(String);

type Outcome = Result<bool, Usage>;

/// Runs the command line given by `args` (program name first) and returns
/// the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let sampling = Sampling::new(cli.window, cli.samples, cli.seed);
    let outcome = match &cli.command {
        Command::Check { bunch } => check(bunch, &sampling, out),
        Command::Derive { bunch, emit_table } => derive(bunch, *emit_table, &sampling, out),
        Command::Decompose { table } => decompose(table, &sampling, out),
        Command::Enumerate { n, parity } => enumerate(*n, *parity, out),
        Command::Roundtrip { bunch } => roundtrip(bunch, &sampling, out),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn read(path: &Path) -> Result<String, Usage> {
    std::fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn load_bunch(path: &Path) -> Result<BunchOfLayerGroups, Usage> {
    let text = read(path)?;
    parse_bunch_dsl(&text)
        .and_then(|doc| doc.to_bunch())
        .map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn print(out: &mut dyn Write, report: &Report) -> bool {
    let _ = writeln!(out, "{report}");
    report.passed()
}

fn check(path: &Path, sampling: &Sampling, out: &mut dyn Write) -> Outcome {
    let g = load_bunch(path)?;
    let groups = validate_bunch_groups(&g, sampling);
    let mut ok = print(out, &groups);
    if !ok {
        return Ok(false);
    }
    match groups_to_algebras(&g) {
        Ok(a) => {
            ok &= print(out, &validate_bunch_algebras(&a, sampling));
            match derive_chain(a) {
                Ok(c) => ok &= print(out, &run_law_suite(&c, sampling)),
                Err(e) => {
                    let _ = writeln!(out, "derive failed: {e}");
                    ok = false;
                }
            }
        }
        Err(e) => {
            let _ = writeln!(out, "groups to algebras failed: {e}");
            ok = false;
        }
    }
    Ok(ok)
}

fn derive(path: &Path, table: bool, sampling: &Sampling, out: &mut dyn Write) -> Outcome {
    let g = load_bunch(path)?;
    let chain = match groups_to_algebras(&g).and_then(derive_chain) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(out, "cannot derive: {e}");
            return Ok(false);
        }
    };
    let idx = g.index();
    let parity = classify_parity(&chain).map_or_else(|e| e.to_string(), |p| p.to_string());
    let _ = writeln!(out, "parity: {parity}");
    for u in 0..g.len() {
        let _ = writeln!(out, "layer {u} ({}): {} {}", idx.label(u), idx.class(u), g.group(u));
    }
    let window = chain.elements().is_none().then_some(sampling.window);
    if table {
        let text = emit_table(&chain, window).map_err(|e| Usage(e.to_string()))?;
        let _ = write!(out, "{text}");
    } else {
        let all = carrier(&chain, window).map_err(|e| Usage(e.to_string()))?;
        let shown: Vec<String> = all.iter().map(|x| x.to_string()).collect();
        let scope = if window.is_some() { format!("window {}", sampling.window) } else { "all".to_string() };
        let _ = writeln!(out, "elements ({scope}, {}): {}", all.len(), shown.join(" < "));
    }
    Ok(true)
}

fn decompose(path: &Path, sampling: &Sampling, out: &mut dyn Write) -> Outcome {
    let text = read(path)?;
    let table = FiniteChainTable::parse(&text).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    if let Some(laws) = run_law_suite_exhaustive(&table) {
        if !print(out, &laws) {
            return Ok(false);
        }
    }
    let chain = Arc::new(table);
    let bunch = match decompose_chain(Arc::clone(&chain), sampling) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(out, "cannot decompose: {e}");
            return Ok(false);
        }
    };
    let idx = bunch.index();
    for u in 0..bunch.len() {
        let layer = bunch.layer(u);
        let elems: Vec<String> = layer.elements().unwrap_or_default().iter().map(|x| x.to_string()).collect();
        let _ = writeln!(
            out,
            "layer {} ({}): unit {}, falsum {}, elements [{}]",
            idx.label(u),
            idx.class(u),
            layer.unit(),
            layer.falsum(),
            elems.join(", ")
        );
    }
    match algebras_to_groups(&bunch, sampling) {
        Ok(g) => {
            let _ = write!(out, "{}", BunchDocument::from_bunch(&g).to_dsl());
        }
        Err(e) => {
            let _ = writeln!(out, "cannot recover groups: {e}");
            return Ok(false);
        }
    }
    Ok(print(out, &check_derive_decompose(chain, sampling)))
}

fn enumerate(n: usize, parity: Option<ParityFilter>, out: &mut dyn Write) -> Outcome {
    let parity = match parity {
        Some(ParityFilter::Only(p)) => Some(p),
        _ => None,
    };
    let cfg = SearchConfig::new(n, parity).map_err(|e| Usage(e.to_string()))?;
    let result = cross_check(&cfg);
    for t in &result.tables {
        let _ = writeln!(out, "{}", t.to_text());
    }
    let ok = print(out, &result.report);
    for (p, count) in &result.counts {
        let _ = writeln!(out, "{}", count_line(n, *p, *count));
    }
    Ok(ok)
}

fn roundtrip(path: &Path, sampling: &Sampling, out: &mut dyn Write) -> Outcome {
    let g = load_bunch(path)?;
    Ok(print(out, &verify_main_theorem(&g, sampling)))
}
