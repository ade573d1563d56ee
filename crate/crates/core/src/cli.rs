//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification discrepancy, 2 input error,
//! 3 oracle size cap exceeded.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::analysis::{
    classify_first_nonlinear, cycle_complement_betti, has_linear_resolution, is_linearly_presented,
    AnalysisError, NonlinearClassification,
};
use crate::ideal::MonomialIdeal;
use crate::io::{parse_input, parse_str, to_ideal_format, InputError};
use crate::oracle::{BettiTable, ExactField, HochsterOracle, OracleError, DEFAULT_CAP};
use crate::verify::{run_sweep, verification_fields, verify_ideal, CheckKind, SweepConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error("{0}")]
    Usage(String),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Oracle(OracleError::CapExceeded { .. }) => EXIT_CAP,
            // Disagreeing linear-presentation routes are a discrepancy, not bad input.
            CliError::Analysis(AnalysisError::InconsistentLinearPresentation { .. }) => {
                EXIT_DISCREPANCY
            }
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "syzygraph",
    version,
    about = "Betti numbers of quadratic monomial ideals from their graphs"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Coefficient field for the oracle: q or gf:<p>.
    #[arg(long, global = true, default_value = "q")]
    pub field: ExactField,
    /// Largest number of (polarized) variables the oracle accepts.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Input file in `graph` or `ideal` format; `-` reads standard input.
    #[arg(required_unless_present = "inline")]
    pub path: Option<PathBuf>,
    /// Input given on the command line, lines separated by `;`.
    #[arg(long, conflicts_with = "path")]
    pub inline: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify where nonlinear syzygies first appear (no oracle).
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        /// List every witness matching or cycle.
        #[arg(long)]
        witnesses: bool,
    },
    /// Betti diagram from the homology oracle.
    Betti {
        #[command(flatten)]
        input: InputArgs,
        /// Also print the multigraded Betti numbers.
        #[arg(long)]
        multigraded: bool,
    },
    /// Print the ideal whose graph is the complement of the n-cycle, with its
    /// predicted Betti diagram as comments.
    CycleIdeal { n: usize },
    /// Run every check on one ideal, over QQ, GF(2) and --field.
    Verify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Verify exhaustively enumerated and seeded random ideals.
    Sweep {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random loop graphs.
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Number of extra graphs with a planted chordless cycle in the complement.
        #[arg(long, default_value_t = 100)]
        planted: usize,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        /// Redraw random graphs whose polarization has more variables (0: no limit).
        #[arg(long, default_value_t = 9)]
        max_polarized: usize,
        /// Enumerate every loop graph on up to this many vertices (0: none).
        #[arg(long, default_value_t = 5)]
        exhaustive: usize,
        /// Write each failing ideal to this directory.
        #[arg(long)]
        replay_dir: Option<PathBuf>,
    },
}

fn read_input(input: &InputArgs) -> Result<MonomialIdeal, CliError> {
    if let Some(text) = &input.inline {
        return Ok(parse_str(&text.replace(';', "\n"))?);
    }
    match input.path.as_deref() {
        Some(p) if p.as_os_str() == "-" => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            Ok(parse_str(&text)?)
        }
        Some(p) => Ok(parse_input(p)?),
        None => Err(CliError::Usage("no input given".into())),
    }
}

fn generators_json(ideal: &MonomialIdeal) -> Vec<[usize; 2]> {
    ideal.generators().iter().map(|&(i, j)| [i, j]).collect()
}

fn write_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn format_matching(edges: &[(usize, usize)]) -> String {
    let parts: Vec<String> = edges.iter().map(|(u, v)| format!("({u},{v})")).collect();
    format!("{{{}}}", parts.join(", "))
}

fn analyze(
    cfg: &RunConfig,
    ideal: &MonomialIdeal,
    witnesses: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let class = classify_first_nonlinear(ideal);
    let linearly_presented = is_linearly_presented(ideal)?;
    let linear = has_linear_resolution(ideal);
    let i3 = class.i3();
    let (r, multidegrees) = match &class {
        NonlinearClassification::FirstStepR {
            r, multidegrees, ..
        } => (Some(*r), multidegrees.clone()),
        _ => (None, Vec::new()),
    };
    let witness_list: Vec<Vec<[usize; 2]>> = match &class {
        NonlinearClassification::FirstStepOne { witnesses, .. } => witnesses
            .iter()
            .map(|m| m.edges().iter().map(|&(u, v)| [u, v]).collect())
            .collect(),
        NonlinearClassification::FirstStepR { witnesses, .. } => witnesses
            .iter()
            .map(|c| {
                let vs = c.vertices();
                (0..vs.len())
                    .map(|k| [vs[k], vs[(k + 1) % vs.len()]])
                    .collect()
            })
            .collect(),
        NonlinearClassification::LinearResolution => Vec::new(),
    };
    if cfg.json {
        let mut v = json!({
            "ideal": ideal.to_string(),
            "num_vars": ideal.num_vars(),
            "generators": generators_json(ideal),
            "classification": class.name(),
            "i3": i3,
            "linearly_presented": linearly_presented,
            "linear_resolution": linear,
        });
        if i3 > 0 {
            v["beta"] = json!({ "i": i3, "j": i3 + 3, "value": class.beta() });
        }
        if let Some(r) = r {
            v["r"] = json!(r);
            v["multidegrees"] = json!(multidegrees);
        }
        if witnesses {
            v["witnesses"] = json!(witness_list);
        }
        write_json(out, &v)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "ideal: {ideal}")?;
    writeln!(out, "classification: {}", class.name())?;
    writeln!(out, "i3: {i3}")?;
    if i3 > 0 {
        writeln!(out, "beta_{},{}: {}", i3, i3 + 3, class.beta())?;
    }
    if let Some(r) = r {
        writeln!(out, "r: {r}")?;
    }
    writeln!(out, "linearly presented: {linearly_presented}")?;
    writeln!(out, "linear resolution: {linear}")?;
    if r.is_some() {
        writeln!(out, "multidegrees:")?;
        for m in &multidegrees {
            let labels: Vec<String> = m.iter().map(|v| format!("x{v}")).collect();
            writeln!(out, "  {}", labels.join(""))?;
        }
    }
    if witnesses && !witness_list.is_empty() {
        writeln!(out, "witnesses:")?;
        for w in &witness_list {
            let edges: Vec<(usize, usize)> = w.iter().map(|e| (e[0], e[1])).collect();
            writeln!(out, "  {}", format_matching(&edges))?;
        }
    }
    Ok(EXIT_OK)
}

fn betti(
    cfg: &RunConfig,
    ideal: &MonomialIdeal,
    multigraded: bool,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let oracle = HochsterOracle::new(cfg.field).with_cap(cfg.cap)?;
    let table = oracle.graded_betti(ideal)?;
    let mg = if multigraded {
        Some(oracle.multigraded_betti(ideal)?)
    } else {
        None
    };
    if cfg.json {
        let mut v = json!({
            "ideal": ideal.to_string(),
            "field": cfg.field,
            "betti": table.entries(),
        });
        if let Some(mg) = &mg {
            v["multigraded"] = json!({
                "num_vars": mg.num_vars(),
                "variable_map": mg.variable_map(),
                "entries": mg.entries(),
            });
        }
        write_json(out, &v)?;
        return Ok(EXIT_OK);
    }
    write!(out, "{}", table.diagram())?;
    if let Some(mg) = &mg {
        writeln!(out, "multigraded ({} variables):", mg.num_vars())?;
        for &(new, orig) in mg.variable_map() {
            writeln!(out, "  x{new} polarizes x{orig}^2")?;
        }
        for (i, s, v) in mg.iter() {
            let labels: Vec<String> = s.iter().map(|v| format!("x{v}")).collect();
            writeln!(out, "  {i} {} {v}", labels.join(""))?;
        }
    }
    Ok(EXIT_OK)
}

/// Betti diagram as `#` comment lines.
fn commented(table: &BettiTable) -> String {
    table
        .diagram()
        .lines()
        .map(|l| format!("# {l}\n"))
        .collect()
}

fn cycle_ideal(cfg: &RunConfig, n: usize, out: &mut dyn Write) -> Result<i32, CliError> {
    let ideal = MonomialIdeal::cycle_complement(n).map_err(|e| CliError::Usage(e.to_string()))?;
    let table = cycle_complement_betti(n)?;
    if cfg.json {
        let v = json!({
            "n": n,
            "ideal": ideal.to_string(),
            "generators": generators_json(&ideal),
            "betti": table.entries(),
        });
        write_json(out, &v)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "# complement of the {n}-cycle 1-2-...-{n}-1")?;
    write!(out, "{}", to_ideal_format(&ideal))?;
    writeln!(out, "# predicted Betti diagram")?;
    write!(out, "{}", commented(&table))?;
    Ok(EXIT_OK)
}

fn verify(cfg: &RunConfig, ideal: &MonomialIdeal, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = verify_ideal(ideal, &verification_fields(Some(cfg.field)), cfg.cap)?;
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    };
    if cfg.json {
        write_json(out, &report)?;
        return Ok(code);
    }
    writeln!(out, "ideal: {}", report.ideal)?;
    writeln!(out, "classification: {}", report.classification)?;
    for c in &report.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        writeln!(out, "{status} {:<24} {}", c.kind.name(), c.detail)?;
    }
    writeln!(
        out,
        "verify: {}",
        if report.passed() { "pass" } else { "FAIL" }
    )?;
    if !report.passed() {
        writeln!(out, "# replay:")?;
        write!(out, "{}", to_ideal_format(ideal))?;
    }
    Ok(code)
}

#[allow(clippy::too_many_arguments)]
fn sweep(
    cfg: &RunConfig,
    seed: u64,
    count: usize,
    planted: usize,
    n_min: usize,
    n_max: usize,
    max_polarized: usize,
    exhaustive: usize,
    replay_dir: Option<&PathBuf>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if n_min == 0 || n_min > n_max {
        return Err(CliError::Usage(format!(
            "bad vertex range {n_min}..={n_max}"
        )));
    }
    HochsterOracle::new(cfg.field).with_cap(cfg.cap)?;
    let sc = SweepConfig {
        seed,
        count,
        planted,
        n_min,
        n_max,
        max_polarized: (max_polarized > 0).then_some(max_polarized),
        exhaustive_max_n: exhaustive,
        cap: cfg.cap,
        fields: verification_fields(Some(cfg.field)),
    };
    let report = run_sweep(&sc);
    if let Some(dir) = replay_dir {
        std::fs::create_dir_all(dir)?;
        for (k, f) in report.failures.iter().enumerate() {
            std::fs::write(dir.join(format!("failure_{k:04}.txt")), &f.replay)?;
        }
    }
    let code = if report.passed() {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    };
    if cfg.json {
        write_json(out, &report)?;
        return Ok(code);
    }
    writeln!(
        out,
        "seed {seed}: {} exhaustive, {} random, {} planted, {} skipped",
        report.exhaustive, report.random, report.planted, report.skipped
    )?;
    writeln!(
        out,
        "{} squarefree, {} with first nonlinear step >= 2",
        report.squarefree, report.first_step_r
    )?;
    for kind in CheckKind::ALL {
        let t = report.tally(kind);
        writeln!(
            out,
            "{:<24} {:>7} passed {:>5} failed",
            kind.name(),
            t.passed,
            t.failed
        )?;
    }
    for f in &report.failures {
        writeln!(out, "FAIL {}", f.ideal)?;
        for c in &f.failed {
            writeln!(out, "  {} {}", c.kind.name(), c.detail)?;
        }
        for line in f.replay.lines() {
            writeln!(out, "  | {line}")?;
        }
    }
    writeln!(
        out,
        "sweep: {}",
        if report.passed() { "pass" } else { "FAIL" }
    )?;
    Ok(code)
}

/// Runs a parsed command, writing results to `out`.
pub fn execute(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32, CliError> {
    match &cfg.command {
        Command::Analyze { input, witnesses } => analyze(cfg, &read_input(input)?, *witnesses, out),
        Command::Betti { input, multigraded } => betti(cfg, &read_input(input)?, *multigraded, out),
        Command::CycleIdeal { n } => cycle_ideal(cfg, *n, out),
        Command::Verify { input } => {
            let ideal = read_input(input)?;
            verify(cfg, &ideal, out)
        }
        Command::Sweep {
            seed,
            count,
            planted,
            n_min,
            n_max,
            max_polarized,
            exhaustive,
            replay_dir,
        } => sweep(
            cfg,
            *seed,
            *count,
            *planted,
            *n_min,
            *n_max,
            *max_polarized,
            *exhaustive,
            replay_dir.as_ref(),
            out,
        ),
    }
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cfg, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
