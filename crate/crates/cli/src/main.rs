use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use quadrank_core::certificate::Certificate;
use quadrank_core::pullback::{run_preset, PresetResult};
use quadrank_core::verify::{self, Report, Suite};
use quadrank_core::{canonical_class, certify, gn_pair, quad_class, Catalog, DivisorClass, Error, Preset};

/// Writes a line to stdout, ignoring a closed pipe.
macro_rules! emit {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout().lock(), $($arg)*);
    }};
}

/// Environment variable bounding the width of text output.
const WIDTH_VAR: &str = "QUADRANK_WIDTH";
const DEFAULT_WIDTH: usize = 100;

#[derive(Parser)]
#[command(name = "quadrank", version, about = "Exact divisor classes on moduli of pointed curves")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The family pairs (g(t), n(t)) with the two matching dimensions.
    Table {
        #[arg(long, default_value_t = 6)]
        t_max: u32,
    },
    /// Build a divisor class.
    Class {
        #[command(subcommand)]
        which: ClassCommand,
    },
    /// Run a named pullback computation.
    Pullback {
        #[arg(long, value_enum)]
        preset: PresetArg,
    },
    /// Run verification suites.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 8)]
        t_max: u32,
        /// List every check, not only failures.
        #[arg(long)]
        verbose: bool,
    },
    /// Solve for a general-type certificate.
    Certify {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
        /// JSON file of extra or replacement catalog entries.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ClassCommand {
    /// The family member for parameter t.
    Quad {
        #[arg(long)]
        t: u32,
    },
    /// The canonical class of M̄_{g,n}.
    Canonical {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PresetArg {
    #[value(name = "bn5-to-51")]
    Bn5To51,
    #[value(name = "quad3-to-168")]
    Quad3To168,
    #[value(name = "quad3-to-178")]
    Quad3To178,
}

impl From<PresetArg> for Preset {
    fn from(p: PresetArg) -> Self {
        match p {
            PresetArg::Bn5To51 => Preset::Bn5To51,
            PresetArg::Quad3To168 => Preset::Quad3To168,
            PresetArg::Quad3To178 => Preset::Quad3To178,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Balance,
    Recurrences,
    Grr,
    Pullbacks,
    Pic12,
    Certificates,
    Properties,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Balance => vec![Suite::Balance],
            SuiteArg::Recurrences => vec![Suite::Recurrences],
            SuiteArg::Grr => vec![Suite::Grr],
            SuiteArg::Pullbacks => vec![Suite::Pullbacks],
            SuiteArg::Pic12 => vec![Suite::Pic12],
            SuiteArg::Certificates => vec![Suite::Certificates],
            SuiteArg::Properties => vec![Suite::Properties],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(flag: &str, err: Error) -> Self {
        Failure { code: 2, message: format!("invalid {flag}: {err}") }
    }

    fn failed(err: Error) -> Self {
        Failure { code: 1, message: err.to_string() }
    }
}

/// Errors caused by the values passed on the command line rather than by a
/// failed computation.
fn is_input_error(err: &Error) -> bool {
    matches!(
        err,
        Error::UnstableSpace { .. }
            | Error::TooManyLabels { .. }
            | Error::NoRecipe { .. }
            | Error::OutOfRange(_)
            | Error::Io(_)
            | Error::Malformed(_)
            | Error::UnknownCatalogEntry(_)
    )
}

fn classify(flag: &str, err: Error) -> Failure {
    if is_input_error(&err) {
        Failure::usage(flag, err)
    } else {
        Failure::failed(err)
    }
}

fn width() -> usize {
    std::env::var(WIDTH_VAR)
        .ok()
        .and_then(|w| w.parse().ok())
        .filter(|&w| w >= 20)
        .unwrap_or(DEFAULT_WIDTH)
}

/// Breaks a long linear combination before `+`/`-` signs.
fn wrap(text: &str, width: usize) -> String {
    let mut lines = vec![String::new()];
    let mut tokens: Vec<String> = Vec::new();
    let mut rest = text;
    while let Some(pos) = find_sign(rest) {
        tokens.push(rest[..pos].to_string());
        rest = &rest[pos..];
        let (sign, tail) = rest.split_at(3);
        rest = tail;
        tokens.push(sign.trim().to_string());
    }
    tokens.push(rest.to_string());
    let mut iter = tokens.into_iter();
    if let Some(first) = iter.next() {
        lines[0].push_str(&first);
    }
    while let (Some(sign), Some(term)) = (iter.next(), iter.next()) {
        let piece = format!(" {sign} {term}");
        let current = lines.last_mut().expect("non-empty");
        if current.chars().count() + piece.chars().count() > width && !current.trim().is_empty() {
            lines.push(format!("    {sign} {term}"));
        } else {
            current.push_str(&piece);
        }
    }
    lines.join("\n")
}

fn find_sign(s: &str) -> Option<usize> {
    match (s.find(" + "), s.find(" - ")) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    }
}

fn emit_json<T: Serialize>(value: &T) {
    emit!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

#[derive(Serialize)]
struct TableRow {
    t: u32,
    g: u32,
    n: u32,
    rank: u32,
    sym2_dim: u32,
    target_dim: u32,
}

fn table(t_max: u32, json: bool) -> Result<(), Failure> {
    let rows: Vec<TableRow> = (0..=t_max)
        .map(|t| {
            let (g, n) = gn_pair(t);
            let rank = g - n;
            TableRow { t, g, n, rank, sym2_dim: rank * (rank + 1) / 2, target_dim: 3 * g - 3 - 2 * n }
        })
        .collect();
    if json {
        emit_json(&rows);
    } else {
        emit!("{:>4} {:>6} {:>6} {:>6} {:>8} {:>8}", "t", "g", "n", "g-n", "dim Sym2", "3g-3-2n");
        for r in &rows {
            emit!("{:>4} {:>6} {:>6} {:>6} {:>8} {:>8}", r.t, r.g, r.n, r.rank, r.sym2_dim, r.target_dim);
        }
    }
    Ok(())
}

fn print_class(title: &str, class: &DivisorClass, json: bool) {
    if json {
        emit_json(class);
    } else {
        emit!("{title} on {}", class.space());
        emit!("{}", wrap(&class.to_string(), width()));
    }
}

fn pullback(preset: Preset, json: bool) -> Result<(), Failure> {
    let result: PresetResult = run_preset(preset).map_err(Failure::failed)?;
    if json {
        emit_json(&result);
        return Ok(());
    }
    let w = width();
    emit!("preset {}", result.preset);
    if let Some(map) = &result.map {
        emit!("map: {map}");
    }
    emit!("pullback on {}:", result.pullback.space());
    emit!("{}", wrap(&result.pullback.to_string(), w));
    if let Some(avg) = &result.averaged {
        emit!("normalized average over ordered point pairs:");
        emit!("{}", wrap(&avg.to_string(), w));
    }
    Ok(())
}

#[derive(Serialize)]
struct OpSummary {
    passed: usize,
    total: usize,
}

fn summarize(report: &Report) -> BTreeMap<&str, OpSummary> {
    let mut out: BTreeMap<&str, OpSummary> = BTreeMap::new();
    for c in &report.checks {
        let entry = out.entry(c.op.as_str()).or_insert(OpSummary { passed: 0, total: 0 });
        entry.total += 1;
        entry.passed += c.pass as usize;
    }
    out
}

fn run_verify(suite: SuiteArg, t_max: u32, verbose: bool, json: bool) -> Result<(), Failure> {
    let report = verify::run(&suite.suites(), t_max).map_err(|e| Failure::usage("--t-max", e))?;
    if json {
        emit_json(&report);
    } else {
        for c in report.checks.iter().filter(|c| verbose || !c.pass) {
            emit!("{c}");
        }
        for (op, s) in summarize(&report) {
            emit!("{op:<32} {:>6}/{}", s.passed, s.total);
        }
        let names: Vec<&str> = report.suites.iter().map(Suite::name).collect();
        emit!(
            "{}: {} checks, {} passed, {} failed (t <= {})",
            names.join(","),
            report.total,
            report.passed,
            report.failed,
            report.t_max
        );
    }
    if report.all_passed() {
        Ok(())
    } else {
        Err(Failure { code: 1, message: format!("{} checks failed", report.failed) })
    }
}

fn print_certificate(cert: &Certificate) {
    emit!("K on {} = {}·Σψ", cert.space, cert.a);
    for c in &cert.components {
        emit!("    + {}·{}", c.c, c.name);
    }
    emit!("    + E");
    let r = &cert.residual;
    emit!("E on λ: {}, on each ψ: {}, on δ_irr: {}", r.lambda, r.psi, r.delta_irr);
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for b in &r.boundary {
        *counts.entry(serde_json::to_value(b.status).expect("enum").as_str().unwrap_or("?").to_string()).or_default() += 1;
    }
    let parts: Vec<String> = counts.iter().map(|(k, v)| format!("{v} {k}")).collect();
    emit!("E on boundary size classes: {}", parts.join(", "));
}

fn run_certify(g: u32, n: u32, catalog: Option<PathBuf>, json: bool) -> Result<(), Failure> {
    let catalog = match catalog {
        Some(path) => quadrank_core::catalog_load(path).map_err(|e| Failure::usage("--catalog", e))?,
        None => Catalog::builtin(),
    };
    let cert = certify(g, n, &catalog).map_err(|e| classify("--g/--n", e))?;
    if json {
        emit_json(&cert);
    } else {
        print_certificate(&cert);
    }
    Ok(())
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Table { t_max } => table(t_max, json),
        Command::Class { which: ClassCommand::Quad { t } } => {
            let class = quad_class(t).map_err(|e| classify("--t", e))?;
            print_class("Quad", &class, json);
            Ok(())
        }
        Command::Class { which: ClassCommand::Canonical { g, n } } => {
            let class = canonical_class(g, n).map_err(|e| classify("--g/--n", e))?;
            print_class("K", &class, json);
            Ok(())
        }
        Command::Pullback { preset } => pullback(preset.into(), json),
        Command::Verify { suite, t_max, verbose } => run_verify(suite, t_max, verbose, json),
        Command::Certify { g, n, catalog } => run_certify(g, n, catalog, json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
