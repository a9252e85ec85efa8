//! The `starinv` command line.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use starinv_core::error::RingError;
use starinv_core::inverse::{portfolio, InverseClass, InverseError};
use starinv_core::lab::{context_lab, sweep, LabError, Oracle, Sampler, SweepConfig, TheoremId, TheoremParams, TheoremVerdict};
use starinv_core::ring::{RingContext, RingElement, StarRing};

use crate::fixtures;
use crate::record::{parse_inline, read_records, ElementRecord};
use crate::report::{ReportRecord, ReportWriter};
use crate::text::{format_element, parse_ring, ring_spec, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISAGREE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_CAPABILITY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "starinv", version, about = "Exact generalized inverses in rings with involution")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every inverse class of an element, with routes and witnesses.
    Compute(ComputeArgs),
    /// Check one statement on one element.
    Verify(VerifyArgs),
    /// Check statements over a whole finite ring or a seeded sample.
    Sweep(SweepArgs),
    /// Exhaustive search in a finite ring.
    Oracle(OracleArgs),
    /// Re-derive the stored fixtures.
    Fixtures,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Report,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Ring spec: `mat:<k>:<Q|Qi|F<p>|F<p>^2>:<transpose|ctranspose>` or `zmod:<n>`.
    #[arg(long)]
    pub ring: Option<String>,
    /// Inline element: `[[1, i], [0, 0]]`, a bare residue, or a JSON record.
    #[arg(long, conflicts_with = "input")]
    pub element: Option<String>,
    /// File of JSON element records.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[command(flatten)]
    pub input: Input,
    /// Exponent for the power routes.
    #[arg(long, default_value_t = 2)]
    pub n: u32,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long)]
    pub theorem: String,
    /// Exponents to check; defaults to the statement's usual range.
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<u32>,
    /// Inner inverse for statements built on one.
    #[arg(long)]
    pub inner: Option<String>,
    /// Second element for statements about pairs.
    #[arg(long)]
    pub other: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub ring: String,
    /// `all` or a comma-separated list of statement codes.
    #[arg(long, default_value = "all")]
    pub theorems: String,
    /// Sample elements instead of enumerating the ring.
    #[arg(long)]
    pub random: bool,
    #[arg(long, default_value_t = 500)]
    pub count: usize,
    /// Entries of sampled elements lie in `[-bound, bound]`.
    #[arg(long, default_value_t = 5)]
    pub bound: i64,
    #[arg(long, env = "STARINV_SEED", default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<u32>,
    /// Inner inverses tried per element.
    #[arg(long, default_value_t = 10)]
    pub inner_cap: usize,
    /// Skip the inverse-engine cross-checks.
    #[arg(long)]
    pub no_engine: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Report file; with `--format report` and no file the report goes to stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: Input,
    /// Solutions listed per class.
    #[arg(long, default_value_t = 4)]
    pub cap: usize,
}

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Usage(String),
    Capability(String),
    Io(io::Error),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) | CliError::Io(_) => EXIT_PARSE,
            CliError::Capability(_) => EXIT_CAPABILITY,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "parse error: {e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Capability(m) => write!(f, "{m}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::NotEnumerable { .. } => CliError::Capability(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type Out<'a> = &'a mut dyn Write;

/// Parses `args` and runs the command, returning the exit code.
pub fn main_with<I, T>(args: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

pub fn run(cli: &Cli, out: Out) -> Result<i32, CliError> {
    match &cli.command {
        Command::Compute(a) => compute(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Sweep(a) => run_sweep(a, out),
        Command::Oracle(a) => oracle(a, out),
        Command::Fixtures => run_fixtures(out),
    }
}

fn ring_of(spec: &Option<String>) -> Result<Option<RingContext>, CliError> {
    spec.as_deref().map(parse_ring).transpose().map_err(CliError::from)
}

fn load(input: &Input) -> Result<Vec<RingElement>, CliError> {
    let ring = ring_of(&input.ring)?;
    let elems = match (&input.element, &input.input) {
        (Some(s), _) => vec![parse_inline(ring.as_ref(), s)?],
        (None, Some(path)) => read_records(&std::fs::read_to_string(path)?)?,
        (None, None) => return Err(CliError::Usage("give --element or --input".into())),
    };
    if let Some(ctx) = &ring {
        if let Some(i) = elems.iter().position(|e| e.context() != *ctx) {
            return Err(CliError::Parse(ParseError::new(format!("record {} is not in {}", i + 1, ring_spec(ctx)))));
        }
    }
    Ok(elems)
}

fn theorem(code: &str) -> Result<TheoremId, CliError> {
    TheoremId::parse(code.trim()).ok_or_else(|| CliError::Usage(format!("unknown theorem {code:?}")))
}

fn theorem_list(s: &str) -> Result<Vec<TheoremId>, CliError> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    s.split(',').map(theorem).collect()
}

fn class_line(class: InverseClass, value: Result<&RingElement, String>, routes: &[&str]) -> String {
    match value {
        Ok(v) => format!("{:<10} exists  {}  routes: {}", class.name(), format_element(v), routes.join(", ")),
        Err(why) => format!("{:<10} none    {why}", class.name()),
    }
}

fn compute(args: &ComputeArgs, out: Out) -> Result<i32, CliError> {
    let mut code = EXIT_OK;
    for a in load(&args.input)? {
        let ctx = a.context();
        writeln!(out, "ring: {}", ring_spec(&ctx))?;
        writeln!(out, "element: {}", format_element(&a))?;
        writeln!(out, "n: {}", args.n)?;
        match portfolio(&ctx, &a, args.n) {
            Ok(p) => {
                for class in InverseClass::ALL {
                    let c = p.class(class);
                    let routes: Vec<&str> = c.routes.iter().map(|r| r.name).collect();
                    let value = c.outcome.as_ref().map_err(|e| e.to_string());
                    writeln!(out, "{}", class_line(class, value, &routes))?;
                }
                writeln!(out, "ep: {}", p.ep)?;
                writeln!(out, "witnesses:")?;
                for (name, w) in p.witnesses.iter() {
                    writeln!(out, "  {name} = {}  ({})", format_element(&w.value), w.equation.describe())?;
                }
            }
            Err(InverseError::InvalidExponent { .. }) => return Err(CliError::Usage(format!("n = {} is below 2", args.n))),
            Err(e) => {
                writeln!(out, "engine failure: {e}")?;
                code = EXIT_DISAGREE;
            }
        }
    }
    Ok(code)
}

fn print_verdict(out: Out, v: &TheoremVerdict<RingElement>) -> io::Result<()> {
    let state = if v.passed() { "agree" } else { "DISAGREE" };
    writeln!(out, "{} {} n={} {}: {state}", v.theorem.code(), ring_spec(&v.element.context()), v.n, format_element(&v.element))?;
    if let Some(b) = &v.other {
        writeln!(out, "  other = {}", format_element(b))?;
    }
    for (i, c) in v.conditions.iter().enumerate() {
        writeln!(out, "  ({}) {:<5} {}", i + 1, c.holds, c.label)?;
    }
    for f in &v.formulas {
        writeln!(out, "  formula {}: {}", f.tag, if f.pass { "pass" } else { "FAIL" })?;
    }
    for (name, e) in &v.values {
        writeln!(out, "  {name} = {}", format_element(e))?;
    }
    if v.external {
        writeln!(out, "  note: this form of the statement is taken from outside the derivation")?;
    }
    Ok(())
}

fn report_sink(format: Format, output: &Option<PathBuf>) -> Result<Option<ReportWriter<Box<dyn Write>>>, CliError> {
    Ok(match (output, format) {
        (Some(path), _) => Some(ReportWriter::new(Box::new(BufWriter::new(File::create(path)?)))),
        (None, Format::Report) => Some(ReportWriter::new(Box::new(io::stdout()))),
        (None, Format::Text) => None,
    })
}

fn verify(args: &VerifyArgs, out: Out) -> Result<i32, CliError> {
    let t = theorem(&args.theorem)?;
    let elems = load(&args.input)?;
    let mut report = report_sink(args.format, &args.output)?;
    let text = args.format == Format::Text;
    let mut code = EXIT_OK;
    for a in elems {
        let ctx = a.context();
        let inner = args.inner.as_deref().map(|s| parse_inline(Some(&ctx), s)).transpose()?;
        let other = args.other.as_deref().map(|s| parse_inline(Some(&ctx), s)).transpose()?;
        let ns = if args.n.is_empty() { t.sweep_exponents().to_vec() } else { args.n.clone() };
        let lab = context_lab(&ctx);
        for n in ns {
            let params = TheoremParams { n, a_inner: inner.clone(), other: other.clone() };
            match lab.verify(t, &a, &params) {
                Ok(v) => {
                    if !v.passed() {
                        code = EXIT_DISAGREE;
                    }
                    if text {
                        print_verdict(out, &v)?;
                    }
                    if let Some(w) = report.as_mut() {
                        w.write(&ReportRecord::verdict(&v))?;
                    }
                }
                Err(e @ (LabError::Exponent { .. } | LabError::MissingParameter(_) | LabError::BadInner)) => {
                    return Err(CliError::Usage(e.to_string()))
                }
                Err(e @ (LabError::NotRegular | LabError::NotApplicable(_))) => {
                    if text {
                        writeln!(out, "{} n={n} {}: skipped ({e})", t.code(), format_element(&a))?;
                    }
                }
                Err(e) => {
                    code = EXIT_DISAGREE;
                    writeln!(out, "{} n={n} {}: engine failure ({e})", t.code(), format_element(&a))?;
                }
            }
        }
    }
    if let Some(w) = report {
        w.finish()?;
    }
    Ok(code)
}

fn run_sweep(args: &SweepArgs, out: Out) -> Result<i32, CliError> {
    let ctx = parse_ring(&args.ring)?;
    let theorems = theorem_list(&args.theorems)?;
    let sampler = if args.random {
        if ctx.size().is_some() {
            return Err(CliError::Usage("--random samples characteristic 0 rings; finite rings are swept exhaustively".into()));
        }
        Sampler::Random { count: args.count, entry_bound: args.bound }
    } else {
        Sampler::Exhaustive
    };
    let mut cfg = SweepConfig::new(theorems, sampler);
    cfg.seed = args.seed;
    cfg.inner_cap = args.inner_cap;
    cfg.engine_checks = !args.no_engine;
    if !args.n.is_empty() {
        cfg.exponents = Some(args.n.clone());
    }
    let mut report = report_sink(args.format, &args.output)?;
    let mut io_err = None;
    let summary = sweep(&ctx, &cfg, &mut |item| {
        if let (Some(w), None) = (report.as_mut(), io_err.as_ref()) {
            if let Err(e) = w.write(&ReportRecord::item(item)) {
                io_err = Some(e);
            }
        }
    })?;
    if let Some(e) = io_err {
        return Err(e.into());
    }
    if let Some(w) = report {
        w.finish()?;
    }
    // With the report on stdout the summary would interleave with it.
    let mut sink = io::sink();
    let text: Out = if args.format == Format::Report && args.output.is_none() { &mut sink } else { out };
    writeln!(text, "ring {}: {} elements, seed {}", ring_spec(&ctx), summary.elements, args.seed)?;
    let mut tallies: Vec<(String, _)> = summary.theorems.iter().map(|(t, s)| (t.code().to_string(), s)).collect();
    if !args.no_engine {
        tallies.insert(0, ("engine".to_string(), &summary.engine));
    }
    for (name, t) in tallies {
        writeln!(text, "{name:<8} checked {:>6}  failed {:>4}  skipped {:>4}", t.checked, t.failed, t.skipped)?;
        if let Some(item) = &t.first_failure {
            let rec = ReportRecord::item(item);
            writeln!(text, "  first failure: {}", rec.to_line())?;
            let element = match item {
                starinv_core::lab::SweepItem::Verdict(v) => &v.element,
                starinv_core::lab::SweepItem::Error { element, .. } => element,
                starinv_core::lab::SweepItem::Engine { element, .. } => element,
            };
            writeln!(text, "  replay: {}", ElementRecord::of(element).to_json())?;
        }
    }
    writeln!(text, "failures: {}", summary.failures())?;
    Ok(if summary.failures() == 0 { EXIT_OK } else { EXIT_DISAGREE })
}

fn oracle(args: &OracleArgs, out: Out) -> Result<i32, CliError> {
    let elems = load(&args.input)?;
    let ctx = elems[0].context();
    let o = Oracle::new(&ctx)?;
    for a in elems {
        let r = o.report(&a, args.cap);
        writeln!(out, "element: {}", format_element(&a))?;
        if !r.regular {
            writeln!(out, "not regular")?;
        }
        let flags = [
            ("regular", r.regular),
            ("unit", r.unit),
            ("idempotent", r.idempotent),
            ("projection", r.projection),
            ("hermitian", r.hermitian),
            ("ep", r.ep),
        ];
        let set: Vec<&str> = flags.iter().filter(|f| f.1).map(|f| f.0).collect();
        writeln!(out, "properties: {}", if set.is_empty() { "none".to_string() } else { set.join(", ") })?;
        for class in InverseClass::ALL {
            let c = r.class(class);
            let shown: Vec<String> = c.solutions.iter().map(format_element).collect();
            writeln!(out, "{:<10} {:>5}  {}", class.name(), c.count, shown.join("; "))?;
        }
        writeln!(out, "validated: {}", r.validated)?;
    }
    Ok(EXIT_OK)
}

fn run_fixtures(out: Out) -> Result<i32, CliError> {
    let all = fixtures::all();
    for f in &all {
        writeln!(out, "{}  {} / {}", if f.pass { "pass" } else { "FAIL" }, f.group, f.name)?;
    }
    let failed = all.iter().filter(|f| !f.pass).count();
    writeln!(out, "{} fixtures, {failed} failed", all.len())?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_DISAGREE })
}
