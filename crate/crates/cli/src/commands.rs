//! Subcommands of the `homlie` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homlie_core::bracket::{to_d_basis, BracketRegistry};
use homlie_core::derivation::make_context;
use homlie_core::extension::{cocycle_table, virasoro_cocycle, virasoro_coefficient_at};
use homlie_core::families::{diagram_report, Algebra, BracketFault, Combination, FamilyRegistry, Gen, DEFAULT_WINDOW};
use homlie_core::opcat::{catalogue, random_corpus, verify_entry};
use homlie_core::report::Status;
use homlie_core::suites::{Fault, SuiteConfig, SuiteRegistry, CATALOGUE_DEGREE, CATALOGUE_PAIRS, CATALOGUE_SEED};
use homlie_core::{Endo, LaurentPoly, Scalar};
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::expr::{parse_laurent, parse_rational, parse_scalar, ExprError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("in {arg}: {source}")]
    Expr {
        arg: String,
        #[source]
        source: ExprError,
    },
    #[error(transparent)]
    Core(#[from] homlie_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("writing {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type CliResult<T> = Result<T, CliError>;

/// What a command printed and whether everything it checked passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub success: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, success: true }
    }
}

#[derive(Debug, Parser)]
#[command(name = "homlie", version, about = "Exact checks for Hom-Lie algebras of twisted derivations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bracket of two coefficients in a derivation context.
    Bracket(BracketArgs),
    /// Run a verification suite; exits nonzero when any check fails.
    Verify(VerifyArgs),
    /// Structure constants and twist of a family.
    Table(TableArgs),
    /// Check every edge of the diagrams of deformations.
    Diagram(DiagramArgs),
    /// The catalogue of twisted derivations and their product rules.
    Catalogue(CatalogueArgs),
    /// Evaluate an expression at rational p and q.
    Specialize(SpecializeArgs),
}

#[derive(Debug, Args)]
pub struct WindowArg {
    /// Generators d_n with |n| <= WINDOW are checked.
    #[arg(long, env = "HOMLIE_WINDOW", default_value_t = DEFAULT_WINDOW)]
    pub window: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// The coefficient in A.
    A,
    /// The expansion in d_n = -t^n D.
    D,
}

#[derive(Debug, Args)]
pub struct BracketArgs {
    /// Image of t under tau, a single term c*t^k.
    #[arg(long)]
    pub tau: String,
    /// Image of t under sigma, a single term c*t^k.
    #[arg(long)]
    pub sigma: String,
    /// Use this element as the generator's g instead of the computed gcd.
    #[arg(long)]
    pub gcd: Option<String>,
    #[arg(short = 'a', allow_hyphen_values = true)]
    pub a: String,
    #[arg(short = 'b', allow_hyphen_values = true)]
    pub b: String,
    /// Bracket rule: general, forced-sigma or forced-tau.
    #[arg(long, default_value = "general")]
    pub kind: String,
    #[arg(long, value_enum, default_value_t = Basis::A)]
    pub basis: Basis,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// One of witt, witt-forced, sl2, sigma-sigma, inverse, virasoro, diagram, catalogue, all.
    pub suite: String,
    #[command(flatten)]
    pub window: WindowArg,
    /// Write the report as JSON to this path, or to stdout with `-`.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Perturb one structure constant: FAMILY:X,Y:TARGET:DELTA, e.g. witt:d_1,d_2:d_3:1.
    #[arg(long, allow_hyphen_values = true)]
    pub perturb: Vec<String>,
    /// Perturb one Virasoro cocycle value g(d_N, d_-N): N:DELTA.
    #[arg(long, allow_hyphen_values = true)]
    pub perturb_cocycle: Vec<String>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// A registered family, or `virasoro` for the cocycle values.
    pub family: String,
    #[command(flatten)]
    pub window: WindowArg,
    /// Evaluate at rational p0, q0.
    #[arg(long, num_args = 2, value_names = ["P0", "Q0"], allow_hyphen_values = true)]
    pub specialize: Option<Vec<String>>,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiagramArgs {
    #[command(flatten)]
    pub window: WindowArg,
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CatalogueArgs {
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SpecializeArgs {
    /// A scalar or Laurent polynomial expression.
    #[arg(allow_hyphen_values = true)]
    pub expr: String,
    #[arg(allow_hyphen_values = true)]
    pub p0: String,
    #[arg(allow_hyphen_values = true)]
    pub q0: String,
}

pub fn run(cli: Cli) -> CliResult<Outcome> {
    match cli.command {
        Command::Bracket(a) => cmd_bracket(&a),
        Command::Verify(a) => cmd_verify(&a),
        Command::Table(a) => cmd_table(&a),
        Command::Diagram(a) => cmd_diagram(&a),
        Command::Catalogue(a) => cmd_catalogue(&a),
        Command::Specialize(a) => cmd_specialize(&a),
    }
}

fn laurent_arg(arg: &str, src: &str) -> CliResult<LaurentPoly> {
    parse_laurent(src).map_err(|source| CliError::Expr { arg: arg.into(), source })
}

fn scalar_arg(arg: &str, src: &str) -> CliResult<Scalar> {
    parse_scalar(src).map_err(|source| CliError::Expr { arg: arg.into(), source })
}

fn rational_arg(arg: &str, src: &str) -> CliResult<BigRational> {
    parse_rational(src).map_err(|source| CliError::Expr { arg: arg.into(), source })
}

fn endo_arg(arg: &str, src: &str) -> CliResult<Endo> {
    let image = laurent_arg(arg, src)?;
    let (c, k) = image
        .as_monomial()
        .ok_or_else(|| CliError::Usage(format!("{arg}: {image} is not a single term c*t^k")))?;
    Ok(Endo::new(c.clone(), k)?)
}

fn emit_json<T: Serialize>(path: &Option<PathBuf>, value: &T, stdout: &mut String) -> CliResult<()> {
    let Some(path) = path else { return Ok(()) };
    let text = serde_json::to_string_pretty(value)?;
    if path.as_os_str() == "-" {
        stdout.push_str(&text);
        stdout.push('\n');
        return Ok(());
    }
    std::fs::write(path, text + "\n").map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

pub fn cmd_bracket(args: &BracketArgs) -> CliResult<Outcome> {
    let tau = endo_arg("--tau", &args.tau)?;
    let sigma = endo_arg("--sigma", &args.sigma)?;
    let g = args.gcd.as_deref().map(|s| laurent_arg("--gcd", s)).transpose()?;
    let ctx = make_context(tau, sigma, g)?;
    let registry = BracketRegistry::default();
    let rule = registry.get(&args.kind).ok_or_else(|| {
        CliError::Usage(format!("unknown bracket kind {}; known: {}", args.kind, registry.names().join(", ")))
    })?;
    rule.admissible(&ctx)?;
    let a = laurent_arg("-a", &args.a)?;
    let b = laurent_arg("-b", &args.b)?;
    let value = rule.bracket(&ctx, &a, &b)?;
    let stdout = match args.basis {
        Basis::A => format!("{value}\n"),
        Basis::D => format!("{value}\n{}\n", to_d_basis(&value)),
    };
    Ok(Outcome::ok(stdout))
}

/// Parses `d_3`, `d_-2`, `e`, `f`, `h` or `c`.
pub fn parse_gen(src: &str) -> CliResult<Gen> {
    let src = src.trim();
    match src {
        "e" => Ok(Gen::E),
        "f" => Ok(Gen::F),
        "h" => Ok(Gen::H),
        "c" => Ok(Gen::C),
        _ => src
            .strip_prefix("d_")
            .and_then(|n| n.parse().ok())
            .map(Gen::D)
            .ok_or_else(|| CliError::Usage(format!("`{src}` is not a generator (d_N, e, f, h or c)"))),
    }
}

/// Parses `FAMILY:X,Y:TARGET:DELTA`.
pub fn parse_bracket_fault(src: &str) -> CliResult<Fault> {
    let usage = || CliError::Usage(format!("--perturb {src}: expected FAMILY:X,Y:TARGET:DELTA"));
    let parts: Vec<&str> = src.splitn(4, ':').collect();
    let [family, pair, target, delta] = parts[..] else { return Err(usage()) };
    let (x, y) = pair.split_once(',').ok_or_else(usage)?;
    let fault = BracketFault {
        x: parse_gen(x)?,
        y: parse_gen(y)?,
        target: parse_gen(target)?,
        delta: scalar_arg("--perturb", delta)?,
    };
    Ok(Fault::Bracket { family: family.to_string(), fault })
}

/// Parses `N:DELTA`.
pub fn parse_cocycle_fault(src: &str) -> CliResult<Fault> {
    let usage = || CliError::Usage(format!("--perturb-cocycle {src}: expected N:DELTA"));
    let (n, delta) = src.split_once(':').ok_or_else(usage)?;
    let n = n.trim().parse().map_err(|_| usage())?;
    Ok(Fault::Cocycle { n, delta: scalar_arg("--perturb-cocycle", delta)? })
}

pub fn cmd_verify(args: &VerifyArgs) -> CliResult<Outcome> {
    let mut cfg = SuiteConfig::new(args.window.window);
    for f in &args.perturb {
        cfg = cfg.with_fault(parse_bracket_fault(f)?);
    }
    for f in &args.perturb_cocycle {
        cfg = cfg.with_fault(parse_cocycle_fault(f)?);
    }
    let report = SuiteRegistry::default().run(&args.suite, &cfg)?;
    let mut stdout = format!("{report}\n");
    emit_json(&args.json, &report, &mut stdout)?;
    Ok(Outcome { stdout, success: report.passed() })
}

#[derive(Debug, Serialize)]
struct BracketRow {
    x: String,
    y: String,
    value: String,
}

#[derive(Debug, Serialize)]
struct TwistRow {
    x: String,
    value: String,
}

#[derive(Debug, Serialize)]
struct CocycleRow {
    n: i64,
    coefficient: String,
}

#[derive(Debug, Serialize)]
struct Table {
    family: String,
    window: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<(String, String)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    brackets: Vec<BracketRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    twist: Vec<TwistRow>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    cocycle: Vec<CocycleRow>,
}

fn render_comb(c: &Combination, point: Option<&(BigRational, BigRational)>) -> CliResult<String> {
    match point {
        None => Ok(c.to_string()),
        Some((p0, q0)) => {
            let at = c.try_map_coeffs(|s| Ok(Scalar::from_rational(s.specialize(p0, q0)?)))?;
            Ok(at.to_string())
        }
    }
}

pub fn cmd_table(args: &TableArgs) -> CliResult<Outcome> {
    let w = args.window.window;
    let point = match &args.specialize {
        Some(v) => Some((rational_arg("--specialize", &v[0])?, rational_arg("--specialize", &v[1])?)),
        None => None,
    };
    let mut table = Table {
        family: args.family.clone(),
        window: w,
        point: point.as_ref().map(|(p, q)| (p.to_string(), q.to_string())),
        brackets: Vec::new(),
        twist: Vec::new(),
        cocycle: Vec::new(),
    };
    if args.family == "virasoro" {
        let g = virasoro_cocycle();
        for (n, value) in cocycle_table(&g, w)? {
            let coefficient = match &point {
                None => value.to_string(),
                Some((p0, q0)) => virasoro_coefficient_at(n, p0, q0)?.to_string(),
            };
            table.cocycle.push(CocycleRow { n, coefficient });
        }
    } else {
        let alg = FamilyRegistry::default().build(&args.family)?.closed;
        let basis = alg.basis(w);
        for (i, x) in basis.iter().enumerate() {
            for y in &basis[i + 1..] {
                let value = render_comb(&alg.bracket(x, y)?, point.as_ref())?;
                table.brackets.push(BracketRow { x: x.to_string(), y: y.to_string(), value });
            }
        }
        for x in &basis {
            table.twist.push(TwistRow { x: x.to_string(), value: render_comb(&alg.twist(x)?, point.as_ref())? });
        }
    }
    let mut stdout = String::new();
    writeln!(stdout, "{} (window {w})", table.family).expect("writing to a String");
    if let Some((p, q)) = &table.point {
        writeln!(stdout, "at p = {p}, q = {q}").expect("writing to a String");
    }
    for r in &table.brackets {
        writeln!(stdout, "[{}, {}] = {}", r.x, r.y, r.value).expect("writing to a String");
    }
    for r in &table.twist {
        writeln!(stdout, "alpha({}) = {}", r.x, r.value).expect("writing to a String");
    }
    for r in &table.cocycle {
        writeln!(stdout, "g(d_{}, d_{}) = {}", r.n, -r.n, r.coefficient).expect("writing to a String");
    }
    emit_json(&args.json, &table, &mut stdout)?;
    Ok(Outcome::ok(stdout))
}

pub fn cmd_diagram(args: &DiagramArgs) -> CliResult<Outcome> {
    let edges = diagram_report(args.window.window)?;
    let mut stdout = String::new();
    for e in &edges {
        write!(stdout, "[{}] {}", e.status, e.edge).expect("writing to a String");
        if let Some(w) = &e.witness {
            write!(stdout, ": {w}").expect("writing to a String");
        }
        stdout.push('\n');
    }
    emit_json(&args.json, &edges, &mut stdout)?;
    Ok(Outcome { stdout, success: edges.iter().all(|e| e.status != Status::Fail) })
}

#[derive(Debug, Serialize)]
struct CatalogueRow {
    name: &'static str,
    operator: &'static str,
    product_rule: &'static str,
    pair: &'static str,
    checked: usize,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

pub fn cmd_catalogue(args: &CatalogueArgs) -> CliResult<Outcome> {
    let corpus = random_corpus(CATALOGUE_SEED, CATALOGUE_PAIRS, CATALOGUE_DEGREE);
    let mut rows = Vec::new();
    for e in catalogue() {
        let rep = verify_entry(&e, &corpus)?;
        rows.push(CatalogueRow {
            name: e.name,
            operator: e.formula,
            product_rule: e.rule,
            pair: e.pair,
            checked: rep.checked,
            status: if rep.passed() { Status::Pass } else { Status::Fail },
            witness: rep.failure.map(|(f, g)| format!("f = {f}, g = {g}")),
        });
    }
    let mut stdout = String::new();
    for r in &rows {
        writeln!(stdout, "[{}] {} {}: D(f) = {}; D(fg) = {} ({} pairs)", r.status, r.name, r.pair, r.operator, r.product_rule, r.checked)
            .expect("writing to a String");
    }
    emit_json(&args.json, &rows, &mut stdout)?;
    Ok(Outcome { stdout, success: rows.iter().all(|r| r.status == Status::Pass) })
}

pub fn cmd_specialize(args: &SpecializeArgs) -> CliResult<Outcome> {
    let f = laurent_arg("expression", &args.expr)?;
    let p0 = rational_arg("p0", &args.p0)?;
    let q0 = rational_arg("q0", &args.q0)?;
    let terms = f.specialize(&p0, &q0)?;
    let at = LaurentPoly::from_terms(terms.into_iter().map(|(k, c)| (k, Scalar::from_rational(c))));
    Ok(Outcome::ok(format!("{at}\n")))
}
