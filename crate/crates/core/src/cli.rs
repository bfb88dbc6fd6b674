//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and renders the result as a table or as JSON.
//!
//! JSON objects have sorted keys and carry `"schema_version"`; numbers are
//! emitted as strings so that big integers and rationals stay exact. The
//! same invocation always produces the same bytes.
//!
//! Exit codes: 0 on success, 1 when a check fails or an internal
//! consistency assertion trips, 2 on usage or input errors.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::cover::{self, Composition, CoverParams};
use crate::error::{Error, Result};
use crate::germ::{self, parse_exponents, TorusPoint};
use crate::local_field::{hilbert_symbol, FieldClass, LocalFieldModel};
use crate::segments::{tadic_expand_L, tadic_expand_Z, CuspidalLabel, Endpoint, Kind, Segment};
use crate::whittaker::{self, DimResult, SweepRange};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Table,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "metacover",
    version,
    about = "Exact invariants of Kazhdan-Patterson covers of GL_r"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, env = "METACOVER_OUTPUT", default_value = "table")]
    pub output: OutputMode,

    /// Shorthand for `--output json`.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tame Hilbert symbol (x, y)_n of two classes "v:e".
    Symbol(SymbolArgs),
    /// Gcd invariants, center exponent and block multiplicities of a cover.
    Cover(CoverArgs),
    /// Determinantal expansion of L(rho,[a,b]) or Z(rho,[a,b]).
    Expand(ExpandArgs),
    /// Germ value at a torsion point of the torus.
    Germ(GermArgs),
    /// Whittaker dimensions.
    #[command(subcommand)]
    Dim(DimCommand),
    /// Cross-checks between closed forms and enumeration.
    #[command(subcommand)]
    Check(CheckCommand),
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Cover degree n.
    #[arg(long)]
    pub n: u64,
    /// Residue field size; defaults to the smallest prime power = 1 mod n.
    #[arg(long)]
    pub q: Option<u64>,
}

impl FieldArgs {
    fn model(&self) -> Result<LocalFieldModel> {
        match self.q {
            Some(q) => LocalFieldModel::new(q, self.n),
            None => LocalFieldModel::smallest_for(self.n),
        }
    }
}

#[derive(Debug, Args)]
pub struct SymbolArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// First class, "v:e".
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    /// Second class, "v:e".
    #[arg(long, allow_hyphen_values = true)]
    pub y: String,
}

#[derive(Debug, Args)]
pub struct CoverArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub c: i64,
    #[arg(long)]
    pub r: usize,
    /// Composition of r, "a,b,c"; defaults to every composition.
    #[arg(long)]
    pub beta: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    L,
    Z,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::L => Kind::L,
            KindArg::Z => Kind::Z,
        }
    }
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Segment length m = b - a + 1.
    #[arg(long)]
    pub m: usize,
    /// Left endpoint a (integer or p/q).
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub a: String,
    /// Cuspidal label "name/r0/k".
    #[arg(long, default_value = "rho/1/0")]
    pub rho: String,
    /// Which family to expand.
    #[arg(long, value_enum, default_value = "l")]
    pub kind: KindArg,
}

#[derive(Debug, Args)]
pub struct GermArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long)]
    pub r0: usize,
    #[arg(long)]
    pub m: usize,
    /// Exponent k of the central character on mu_n.
    #[arg(long)]
    pub k: u64,
    /// Exponents of the torus point, "e1,e2,...".
    #[arg(long, allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, value_enum, default_value = "l")]
    pub kind: KindArg,
}

#[derive(Debug, Args)]
pub struct CoverShape {
    #[command(flatten)]
    pub field: FieldArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub c: i64,
    #[arg(long)]
    pub r0: usize,
}

#[derive(Debug, Subcommand)]
pub enum DimCommand {
    /// Square-integrable L(rho~,[0,m'-1]) with mc = L(rho,[0,m-1]).
    Sqrt {
        #[command(flatten)]
        shape: CoverShape,
        #[arg(long)]
        m: usize,
        /// Order of omega_rho on mu_n.
        #[arg(long)]
        s: u64,
        /// Recompute by enumeration of torus points.
        #[arg(long)]
        oracle: bool,
    },
    /// L(rho~,[0,k-1]) on a cuspidal of rank r0*s.
    L {
        #[command(flatten)]
        shape: CoverShape,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        k: usize,
    },
    /// Z(rho~,[0,k-1]) on a cuspidal of rank r0*s.
    Z {
        #[command(flatten)]
        shape: CoverShape,
        #[arg(long)]
        s: u64,
        #[arg(long)]
        k: usize,
    },
    /// Bernstein-Zelevinsky product of blocks given as "r_i:d_i".
    Product {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        /// One block "rank:dimension"; repeat for each factor.
        #[arg(long = "part", required = true)]
        parts: Vec<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Oracle against closed form over a parameter box.
    Oracle {
        #[arg(long, default_value_t = 4)]
        n_max: u64,
        /// Comma-separated values of c.
        #[arg(long, default_value = "0,1,2")]
        c: String,
        #[arg(long, default_value_t = 2)]
        r0_max: usize,
        #[arg(long, default_value_t = 4)]
        m_max: usize,
        #[arg(long, default_value_t = 6)]
        r_max: usize,
    },
    /// The four combinatorial identities for every n up to --n.
    Identities {
        #[arg(long, default_value_t = 8)]
        n: u64,
        /// Largest m (or k).
        #[arg(long, default_value_t = 8)]
        size: u64,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            let code = err.exit_code();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let mode = if cli.json { OutputMode::Json } else { cli.output };
    match dispatch(&cli.command) {
        Ok(report) => Outcome {
            code: if report.passed { 0 } else { 1 },
            stdout: render(&report.body, mode),
            stderr: String::new(),
        },
        Err(err) => Outcome {
            code: if err.is_internal() { 1 } else { 2 },
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        },
    }
}

/// A rendered-to-be command result; `passed` is false when a check failed.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub body: Value,
    pub passed: bool,
}

impl Report {
    fn new(command: &str, mut fields: Map<String, Value>) -> Self {
        fields.insert("command".into(), command.into());
        fields.insert("schema_version".into(), SCHEMA_VERSION.into());
        Self {
            body: Value::Object(fields),
            passed: true,
        }
    }
}

fn obj(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(map) => map,
        _ => unreachable!("built from json! object literals"),
    }
}

fn text(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn dispatch(command: &Command) -> Result<Report> {
    match command {
        Command::Symbol(args) => symbol(args),
        Command::Cover(args) => cover_report(args),
        Command::Expand(args) => expand(args),
        Command::Germ(args) => germ_report(args),
        Command::Dim(dim) => dim_report(dim),
        Command::Check(check) => check_report(check),
    }
}

fn symbol(args: &SymbolArgs) -> Result<Report> {
    let model = args.field.model()?;
    let x = FieldClass::parse(&args.x, &model)?;
    let y = FieldClass::parse(&args.y, &model)?;
    let h = hilbert_symbol(&model, x, y);
    Ok(Report::new(
        "symbol",
        obj(json!({
            "model": text(model),
            "q": text(model.q()),
            "n": text(model.n()),
            "x": text(x),
            "y": text(y),
            "exponent": text(h.exponent()),
            "symbol": text(h),
        })),
    ))
}

fn cover_report(args: &CoverArgs) -> Result<Report> {
    let model = args.field.model()?;
    let cv = CoverParams::new(args.r, args.field.n, args.c)?;
    let betas = match &args.beta {
        Some(b) => vec![b.parse::<Composition>()?],
        None => Composition::all(args.r),
    };
    let mut rows = Vec::new();
    for beta in &betas {
        let mult = cover::multiplicities(&cv, &model, beta)?;
        rows.push(json!({
            "beta": text(beta),
            "n_beta": text(mult.n_beta),
            "m_beta": text(mult.m_beta),
            "M_beta": text(mult.big_m_beta),
        }));
    }
    Ok(Report::new(
        "cover",
        obj(json!({
            "q": text(model.q()),
            "n": text(cv.n()),
            "c": text(cv.c()),
            "r": text(cv.r()),
            "d_r": text(cv.d_r()),
            "d_prime_r": text(cv.d_prime_r()),
            "center_exponent": text(cv.center_exponent()),
            "torus_lift_check": Value::Bool(cover::torus_lift_multiplicity_check(&cv, &model)?),
            "multiplicities": Value::Array(rows),
        })),
    ))
}

fn expand(args: &ExpandArgs) -> Result<Report> {
    let rho: CuspidalLabel = args.rho.parse()?;
    let a: Endpoint = args
        .a
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad endpoint {:?}", args.a)))?;
    let seg = Segment::with_length(rho, a, args.m)?;
    let kind = Kind::from(args.kind);
    let elem = match kind {
        Kind::L => tadic_expand_L(&seg),
        Kind::Z => tadic_expand_Z(&seg),
    };
    let terms: Vec<Value> = elem
        .terms()
        .map(|(term, coeff)| {
            let factors: Vec<Value> = term.factors().iter().map(text).collect();
            json!({ "coefficient": text(coeff), "factors": Value::Array(factors) })
        })
        .collect();
    Ok(Report::new(
        "expand",
        obj(json!({
            "input": text(format!("{kind}({seg})")),
            "basis": text(elem.basis()),
            "term_count": text(elem.len()),
            "expansion": text(&elem),
            "terms": Value::Array(terms),
        })),
    ))
}

fn germ_report(args: &GermArgs) -> Result<Report> {
    let model = args.field.model()?;
    let n = model.n();
    let seg = Segment::with_length(CuspidalLabel::new("rho", args.r0, args.k % n)?, 0.into(), args.m)?;
    let x = TorusPoint::new(n, &parse_exponents(&args.x)?)?;
    germ::weyl_discriminant(&model, &x)?;
    let value = match Kind::from(args.kind) {
        Kind::L => germ::germ_L(&seg, &x)?,
        Kind::Z => germ::germ_Z(&seg, &x)?,
    };
    let mut fields = obj(json!({
        "q": text(model.q()),
        "n": text(n),
        "kind": text(Kind::from(args.kind)),
        "segment": text(&seg),
        "x": text(&x),
        "value": text(value.pretty()),
        "cycint": text(&value),
        "conjectural": Value::Bool(germ::germ_z_is_conjectural(&seg)),
    }));
    if let Some(z) = value.is_rational_integer() {
        fields.insert("integer".into(), text(z));
    }
    Ok(Report::new("germ", fields))
}

fn dim_fields(d: &DimResult, params: Value) -> Map<String, Value> {
    obj(json!({
        "value": text(&d.value),
        "provenance": text(d.provenance),
        "conjectural": Value::Bool(d.conjectural),
        "params": params,
    }))
}

fn shape_params(shape: &CoverShape, model: &LocalFieldModel, cv: &CoverParams) -> Map<String, Value> {
    obj(json!({
        "q": text(model.q()),
        "n": text(cv.n()),
        "c": text(cv.c()),
        "r": text(cv.r()),
        "r0": text(shape.r0),
        "d_r": text(cv.d_r()),
    }))
}

fn dim_report(dim: &DimCommand) -> Result<Report> {
    match dim {
        DimCommand::Sqrt { shape, m, s, oracle } => {
            let model = shape.field.model()?;
            let cv = CoverParams::new(shape.r0 * m, model.n(), shape.c)?;
            let d = if *oracle {
                let label = whittaker::label_of_order(model.n(), shape.r0, *s)?;
                whittaker::dim_sqrt_bruteforce(&cv, &model, shape.r0, *m, &label)?
            } else {
                whittaker::dim_sqrt_closed(&cv, shape.r0, *m, *s)?
            };
            let mut params = shape_params(shape, &model, &cv);
            params.insert("m".into(), text(m));
            params.insert("s".into(), text(s));
            Ok(Report::new("dim sqrt", dim_fields(&d, Value::Object(params))))
        }
        DimCommand::L { shape, s, k } | DimCommand::Z { shape, s, k } => {
            let model = shape.field.model()?;
            let cv = CoverParams::new(shape.r0 * *s as usize * k, model.n(), shape.c)?;
            let (name, d) = match dim {
                DimCommand::L { .. } => ("dim l", whittaker::dim_L_closed(&cv, shape.r0, *s, *k)?),
                _ => ("dim z", whittaker::dim_Z_closed(&cv, shape.r0, *s, *k)?),
            };
            let mut params = shape_params(shape, &model, &cv);
            params.insert("s".into(), text(s));
            params.insert("k".into(), text(k));
            Ok(Report::new(name, dim_fields(&d, Value::Object(params))))
        }
        DimCommand::Product { field, c, parts } => {
            let model = field.model()?;
            let parts = parts.iter().map(|p| parse_part(p)).collect::<Result<Vec<_>>>()?;
            let r = parts.iter().map(|(r, _)| r).sum();
            let cv = CoverParams::new(r, model.n(), *c)?;
            let d = whittaker::dim_product(&cv, &parts)?;
            let rendered: Vec<Value> = parts.iter().map(|(r, d)| text(format!("{r}:{d}"))).collect();
            let params = json!({
                "q": text(model.q()),
                "n": text(cv.n()),
                "c": text(cv.c()),
                "r": text(cv.r()),
                "d_r": text(cv.d_r()),
                "parts": Value::Array(rendered),
            });
            Ok(Report::new("dim product", dim_fields(&d, params)))
        }
    }
}

fn parse_part(s: &str) -> Result<(usize, BigInt)> {
    let (r, d) = s
        .split_once(':')
        .ok_or_else(|| Error::Parse(format!("expected rank:dimension, got {s:?}")))?;
    let r = r
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad rank in {s:?}")))?;
    let d = d
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad dimension in {s:?}")))?;
    Ok((r, d))
}

fn check_report(check: &CheckCommand) -> Result<Report> {
    match check {
        CheckCommand::Oracle {
            n_max,
            c,
            r0_max,
            m_max,
            r_max,
        } => {
            let c_values = c
                .split(',')
                .map(|v| v.trim().parse().map_err(|_| Error::Parse(format!("bad c value {v:?}"))))
                .collect::<Result<Vec<u64>>>()?;
            let range = SweepRange {
                n_max: *n_max,
                c_values,
                r0_max: *r0_max,
                m_max: *m_max,
                r_max: *r_max,
            };
            let records = whittaker::oracle_sweep(&range)?;
            let passed = records.iter().all(|r| r.agrees());
            let rows: Vec<Value> = records
                .iter()
                .map(|r| {
                    json!({
                        "q": text(r.q), "n": text(r.n), "c": text(r.c), "r0": text(r.r0),
                        "m": text(r.m), "s": text(r.s),
                        "closed_form": text(&r.closed.value),
                        "brute_force": text(&r.brute.value),
                        "conjectural": Value::Bool(r.closed.conjectural || r.brute.conjectural),
                        "agree": Value::Bool(r.agrees()),
                    })
                })
                .collect();
            let mut report = Report::new(
                "check oracle",
                obj(json!({
                    "tuples": text(records.len()),
                    "passed": Value::Bool(passed),
                    "records": Value::Array(rows),
                })),
            );
            report.passed = passed;
            Ok(report)
        }
        CheckCommand::Identities { n, size } => {
            let checks = whittaker::check_identities(*n, *size);
            let passed = checks.iter().all(|c| c.passed);
            let failures: Vec<Value> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| json!({ "identity": c.identity, "n": text(c.n), "s": text(c.s), "size": text(c.size) }))
                .collect();
            let mut report = Report::new(
                "check identities",
                obj(json!({
                    "n_max": text(n),
                    "size_max": text(size),
                    "checks": text(checks.len()),
                    "passed": Value::Bool(passed),
                    "failures": Value::Array(failures),
                })),
            );
            report.passed = passed;
            Ok(report)
        }
    }
}

/// Renders a report. JSON is pretty-printed with sorted keys and a trailing
/// newline; tables list scalar fields as `key  value` and arrays of objects
/// as aligned columns.
pub fn render(body: &Value, mode: OutputMode) -> String {
    match mode {
        OutputMode::Json => render_json(body),
        OutputMode::Table => render_table(body),
    }
}

pub fn render_json(body: &Value) -> String {
    let mut out = serde_json::to_string_pretty(body).expect("json values always serialize");
    out.push('\n');
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(" "),
        other => other.to_string(),
    }
}

fn render_table(body: &Value) -> String {
    let Value::Object(map) = body else {
        return scalar(body) + "\n";
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    let mut tables = Vec::new();
    for (key, value) in map {
        match value {
            Value::Array(rows) if rows.first().is_some_and(Value::is_object) => tables.push((key, rows)),
            Value::Object(inner) => {
                for (k, v) in inner {
                    let name = format!("{key}.{k}");
                    out += &format!("{name:<width$}  {}\n", scalar(v), width = width.max(name.len()));
                }
            }
            _ => out += &format!("{key:<width$}  {}\n", scalar(value)),
        }
    }
    for (key, rows) in tables {
        out += &format!("\n{key}:\n");
        let columns: Vec<&String> = match &rows[0] {
            Value::Object(first) => first.keys().collect(),
            _ => Vec::new(),
        };
        let cells: Vec<Vec<String>> = rows
            .iter()
            .map(|row| {
                columns
                    .iter()
                    .map(|c| row.get(c.as_str()).map(scalar).unwrap_or_default())
                    .collect()
            })
            .collect();
        let widths: Vec<usize> = columns
            .iter()
            .enumerate()
            .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap_or(0))
            .collect();
        let line = |items: Vec<&str>| {
            let padded: Vec<String> = items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out += &line(columns.iter().map(|c| c.as_str()).collect());
        for row in &cells {
            out += &line(row.iter().map(String::as_str).collect());
        }
    }
    out
}
