//! The `indomatic` command line: argument definitions and the command
//! implementations, which return their output and exit code instead of
//! printing so they can be tested in-process.
//!
//! Exit codes: 0 success, 1 a negative verdict (invalid partition, violated
//! law, oracle mismatch), 2 an input error, 3 an inapplicable request.

pub mod formats;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::critical::{characterization_holds, deletion_profile, Characterization};
use crate::digraph::Digraph;
use crate::domination::{is_strong_in_domatic_partition, is_strong_out_domatic_partition};
use crate::error::Error;
use crate::families::{self, Claims, FamilyInstance};
use crate::laws::{check_all_with, LawConfig};
use crate::solver::{self, brute_force_oracle, Invariant, ORACLE_MAX_ARCS, ORACLE_MAX_ORDER};
use crate::transforms::{self, CompositionSpec};
use crate::undirected::{self, CliqueDomination};
use formats::{parse_digraph, parse_partition, write_arc_partition, write_digraph, write_partition, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INAPPLICABLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "indomatic", version, about = "Strong in-domatic number of digraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an invariant and its witness.
    Compute(ComputeArgs),
    /// Check a partition against a digraph.
    Verify(VerifyArgs),
    /// Build a derived digraph.
    Transform(TransformArgs),
    /// Generate a family member with its partition and claims.
    Generate(GenerateArgs),
    /// Print the arc-deletion profile and the criticality verdicts.
    Critical(CriticalArgs),
    /// Evaluate every law on a digraph.
    Laws(LawsArgs),
    /// Compare the solver with exhaustive enumeration.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Dsminus,
    Dsplus,
    Lambda,
    Indomatic,
    Dc,
    Kappa,
    Gammacl,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub what: What,
    /// Write the witness here instead of printing it.
    #[arg(long)]
    pub witness: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    In,
    Out,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub partition: PathBuf,
    #[arg(long, value_enum, default_value = "in")]
    pub mode: Mode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    Line,
    Subdivision,
    Root,
    Middle,
    Total,
    Converse,
    Product,
    Compose,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub op: Op,
    /// Second factor for `product`; one part per host vertex for `compose`.
    #[arg(long = "with", num_args = 1..)]
    pub with: Vec<PathBuf>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write a DOT rendering labelled with vertex origins.
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Complete,
    Cycle,
    Empty,
    PairCritical,
    OrderValue,
    CriticalComposition,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Parameters as `key=value`, e.g. `n=3` or `p=7 m=3`.
    #[arg(long, num_args = 0..)]
    pub params: Vec<String>,
    /// Digraph file; the partition goes to `<out>.part` and the claims to
    /// `<out>.claims.json`.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct CriticalArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct LawsArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub json: bool,
    /// Seed for the sampled spanning subdigraphs.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    /// Second factor for the product law (default `K_2`).
    #[arg(long = "with")]
    pub with: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Scan every labeled digraph of this order.
    #[arg(long, default_value_t = 3)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also compare on this many random strong digraphs.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    /// Largest order of the random digraphs.
    #[arg(long, default_value_t = 6)]
    pub up_to: usize,
    /// Compare Λ on digraphs with at most this many arcs.
    #[arg(long, default_value_t = ORACLE_MAX_ARCS)]
    pub lambda_arcs: usize,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Inapplicable(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Inapplicable(_) => EXIT_INAPPLICABLE,
            _ => EXIT_INPUT,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Loop(_)
            | Error::EndpointOutOfRange { .. }
            | Error::DuplicateArc(..)
            | Error::TooManyVertices(_)
            | Error::InvalidVertex(_)
            | Error::MalformedPartition(_) => CliError::Input(e.to_string()),
            _ => CliError::Inapplicable(e.to_string()),
        }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

fn write(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

pub fn read_digraph(path: &Path) -> CliResult<Digraph> {
    parse_digraph(&read(path)?).map_err(|source| CliError::Parse { path: path.to_owned(), source })
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Transform(a) => transform(a),
        Command::Generate(a) => generate(a),
        Command::Critical(a) => critical(a),
        Command::Laws(a) => laws(a),
        Command::Oracle(a) => oracle(a),
    };
    result.unwrap_or_else(|e| Outcome { code: e.code(), stdout: String::new(), stderr: format!("error: {e}\n") })
}

/// Parses `args` (including the program name) and runs them. Argument
/// errors exit with code 2.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            }
        }
    }
}

fn compute(a: &ComputeArgs) -> CliResult<Outcome> {
    let d = read_digraph(&a.input)?;
    let (value, witness) = match a.what {
        What::Dsminus => {
            let r = solver::strong_in_domatic_number(&d)?;
            (r.value, Some(write_partition(&r.witness)))
        }
        What::Dsplus => {
            let r = solver::strong_out_domatic_number(&d)?;
            (r.value, Some(write_partition(&r.witness)))
        }
        What::Lambda => {
            let r = solver::lambda_number(&d)?;
            (r.value, Some(write_arc_partition(&r.witness)))
        }
        What::Indomatic => {
            let r = solver::in_domatic_number(&d)?;
            (r.value, Some(write_partition(&r.witness)))
        }
        What::Dc => {
            let r = undirected::connected_domatic_number(&undirected::underlying_graph(&d))?;
            (r.value, Some(write_partition(&r.witness)))
        }
        What::Kappa => (undirected::vertex_connectivity(&undirected::underlying_graph(&d))?, None),
        What::Gammacl => match undirected::clique_domination_number(&undirected::underlying_graph(&d))? {
            CliqueDomination::Number(g) => (g, None),
            CliqueDomination::NoDominatingClique => {
                return Err(CliError::Inapplicable("the underlying graph has no dominating clique".into()))
            }
        },
    };
    let mut out = format!("{value}\n");
    match (witness, &a.witness) {
        (Some(w), Some(path)) => write(path, &w)?,
        (Some(w), None) => {
            out.push_str("# witness\n");
            out.push_str(&w);
        }
        (None, Some(_)) => return Err(CliError::Inapplicable("this invariant has no witness".into())),
        (None, None) => {}
    }
    Ok(Outcome::ok(out))
}

fn verify(a: &VerifyArgs) -> CliResult<Outcome> {
    let d = read_digraph(&a.input)?;
    let p = parse_partition(&read(&a.partition)?, d.order())
        .map_err(|source| CliError::Parse { path: a.partition.clone(), source })?;
    let check = match a.mode {
        Mode::In => is_strong_in_domatic_partition(&d, &p)?,
        Mode::Out => is_strong_out_domatic_partition(&d, &p)?,
    };
    Ok(if check.is_valid() {
        Outcome::ok("valid\n".into())
    } else {
        Outcome { code: EXIT_NEGATIVE, stdout: format!("invalid: {check}\n"), stderr: String::new() }
    })
}

fn transform(a: &TransformArgs) -> CliResult<Outcome> {
    let d = read_digraph(&a.input)?;
    let with = a.with.iter().map(|p| read_digraph(p)).collect::<CliResult<Vec<_>>>()?;
    let arity = |n: usize, what: &str| -> CliResult<()> {
        if with.len() == n {
            Ok(())
        } else {
            Err(CliError::Input(format!("--op {what} takes {n} --with file(s), got {}", with.len())))
        }
    };
    let (out, labels): (Digraph, Vec<String>) = match a.op {
        Op::Line => {
            arity(0, "line")?;
            let l = transforms::line_digraph(&d)?;
            let labels = l.arcs.iter().map(|(u, v)| format!("({u},{v})")).collect();
            (l.digraph, labels)
        }
        Op::Subdivision | Op::Root | Op::Middle | Op::Total => {
            arity(0, "subdivision/root/middle/total")?;
            let t = match a.op {
                Op::Subdivision => transforms::subdivision(&d)?,
                Op::Root => transforms::root(&d)?,
                Op::Middle => transforms::middle(&d)?,
                _ => transforms::total(&d)?,
            };
            let labels = t.tags.iter().map(|t| t.to_string()).collect();
            (t.digraph, labels)
        }
        Op::Converse => {
            arity(0, "converse")?;
            (d.converse(), (0..d.order()).map(|v| v.to_string()).collect())
        }
        Op::Product => {
            arity(1, "product")?;
            let p = transforms::cartesian_product(&d, &with[0])?;
            let labels = p.coords.iter().map(|(x, y)| format!("({x},{y})")).collect();
            (p.digraph, labels)
        }
        Op::Compose => {
            arity(d.order(), "compose")?;
            let c = transforms::composition(&CompositionSpec::new(d, with)?)?;
            let labels = c.origin.iter().map(|(v, i)| format!("{v}:{i}")).collect();
            (c.digraph, labels)
        }
    };
    if let Some(path) = &a.dot {
        write(path, &formats::to_dot(&out, Some(&labels)))?;
    }
    let text = write_digraph(&out);
    Ok(match &a.out {
        Some(path) => {
            write(path, &text)?;
            Outcome::ok(format!("wrote {} (order {}, {} arcs)\n", path.display(), out.order(), out.arc_count()))
        }
        None => Outcome::ok(text),
    })
}

/// The claims sidecar written by `generate`.
#[derive(Debug, Serialize)]
struct ClaimsFile<'a> {
    family: &'a str,
    params: &'a BTreeMap<String, usize>,
    #[serde(flatten)]
    claims: Claims,
}

fn parse_params(raw: &[String]) -> CliResult<BTreeMap<String, usize>> {
    raw.iter()
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| CliError::Input(format!("parameter {kv:?} is not key=value")))?;
            let v = v
                .parse()
                .map_err(|_| CliError::Input(format!("parameter {k} needs a nonnegative integer, got {v:?}")))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn generate(a: &GenerateArgs) -> CliResult<Outcome> {
    let params = parse_params(&a.params)?;
    let get = |key: &str| -> CliResult<usize> {
        params.get(key).copied().ok_or_else(|| CliError::Input(format!("missing parameter {key}")))
    };
    let (name, instance): (&str, Option<FamilyInstance>) = match a.family {
        Family::Complete => ("complete", Some(families::complete_family(get("n")?)?)),
        Family::Cycle => ("cycle", Some(families::cycle_family(get("n")?)?)),
        Family::Empty => ("empty", None),
        Family::PairCritical => ("pair-critical", Some(families::pair_critical_family(get("n")?)?)),
        Family::OrderValue => ("order-value", Some(families::order_value_family(get("p")?, get("m")?)?)),
        Family::CriticalComposition => (
            "critical-composition",
            Some(families::critical_composition_family(get("p")?, get("n")?)?),
        ),
    };
    let digraph = match &instance {
        Some(f) => f.digraph.clone(),
        None => families::empty_digraph(get("n")?)?,
    };
    write(&a.out, &write_digraph(&digraph))?;
    let mut out = format!("wrote {} (order {}, {} arcs)\n", a.out.display(), digraph.order(), digraph.arc_count());
    if let Some(f) = &instance {
        if let Some(p) = &f.canonical_partition {
            let path = sidecar(&a.out, "part");
            write(&path, &write_partition(p))?;
            writeln!(out, "wrote {}", path.display()).unwrap();
        }
        let path = sidecar(&a.out, "claims.json");
        let claims = ClaimsFile { family: name, params: &params, claims: f.claims() };
        write(&path, &(serde_json::to_string_pretty(&claims).expect("claims serialize") + "\n"))?;
        writeln!(out, "wrote {}", path.display()).unwrap();
        writeln!(out, "claimed value {}, critical {}", f.claimed_value, f.claimed_critical).unwrap();
    }
    Ok(Outcome::ok(out))
}

/// `<path>.<ext>`, keeping the original extension.
pub fn sidecar(path: &Path, ext: &str) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn critical(a: &CriticalArgs) -> CliResult<Outcome> {
    let d = read_digraph(&a.input)?;
    let profile = deletion_profile(&d)?;
    let mut out = String::from("arc       still-strong  value-after\n");
    for r in &profile.records {
        let arc = format!("({},{})", r.arc.0, r.arc.1);
        let after = r.value_after.map_or("-".to_string(), |v| v.to_string());
        writeln!(out, "{arc:<9} {:<13} {after}", if r.still_strong { "yes" } else { "no" }).unwrap();
    }
    writeln!(out, "d_s⁻: {}", profile.value).unwrap();
    match profile.first_witness() {
        None => out.push_str("critical: yes\n"),
        Some(r) => {
            let (u, v) = r.arc;
            match r.value_after {
                None => writeln!(out, "critical: no (arc ({u},{v}) deletion destroys strongness)"),
                Some(after) => writeln!(
                    out,
                    "critical: no (arc ({u},{v}) deletion gives d_s⁻ = {after}, not {})",
                    profile.value as isize - 1
                ),
            }
            .unwrap();
        }
    }
    match characterization_holds(&d)? {
        Characterization::Holds { partitions } => {
            writeln!(out, "characterization: holds ({partitions} maximum partitions checked)").unwrap()
        }
        Characterization::Fails { partition, failure } => {
            let blocks: Vec<String> =
                partition.blocks().iter().map(|b| format!("{:?}", b.to_vec())).collect();
            writeln!(out, "characterization: fails on {}: {failure}", blocks.join(" ")).unwrap()
        }
        Characterization::NotApplicable { reason } => {
            writeln!(out, "characterization: not applicable ({reason})").unwrap()
        }
    }
    Ok(Outcome::ok(out))
}

fn laws(a: &LawsArgs) -> CliResult<Outcome> {
    let d = read_digraph(&a.input)?;
    let second_factor = a.with.as_deref().map(read_digraph).transpose()?;
    let config = LawConfig { spanning_samples: a.samples, seed: a.seed, second_factor, ..LawConfig::default() };
    let report = check_all_with(&d, &config)?;
    let text = if a.json { report.to_json() + "\n" } else { format!("{report}\n") };
    let code = if report.violations().next().is_some() { EXIT_NEGATIVE } else { EXIT_OK };
    Ok(Outcome { code, stdout: text, stderr: String::new() })
}

/// Result of comparing the solvers with exhaustive enumeration on one
/// digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub strong: bool,
    /// `(solver, oracle)` for d_s⁻; the solver side is `None` when it
    /// reports the digraph non-strong.
    pub ds: (Option<usize>, Option<usize>),
    /// `(solver, oracle)` for Λ when compared.
    pub lambda: Option<(usize, Option<usize>)>,
}

impl Comparison {
    pub fn agrees(&self) -> bool {
        self.ds.0 == self.ds.1 && self.lambda.is_none_or(|(s, o)| Some(s) == o)
    }
}

/// Runs the solver and the oracle for d_s⁻ on `d` and, for strong `d` with
/// between 1 and `lambda_arcs` arcs, for Λ.
pub fn compare_with_oracle(d: &Digraph, lambda_arcs: usize) -> crate::Result<Comparison> {
    let strong = d.is_strong()?;
    let solved = match solver::strong_in_domatic_number(d) {
        Ok(r) => Some(r.value),
        Err(Error::NotStrong) => None,
        Err(e) => return Err(e),
    };
    let oracle = brute_force_oracle(d, Invariant::StrongInDomatic)?;
    let arcs = d.arc_count();
    let lambda = if strong && arcs >= 1 && arcs <= lambda_arcs.min(ORACLE_MAX_ARCS) {
        Some((solver::lambda_number(d)?.value, brute_force_oracle(d, Invariant::Lambda)?))
    } else {
        None
    };
    Ok(Comparison { strong, ds: (solved, oracle), lambda })
}

#[derive(Default)]
struct Tally {
    lambda_arcs: usize,
    mismatches: usize,
    lambda_compared: usize,
    out: String,
}

impl Tally {
    /// Compares on `d`, logging any mismatch; returns whether `d` is strong.
    fn add(&mut self, d: &Digraph) -> CliResult<bool> {
        let c = compare_with_oracle(d, self.lambda_arcs)?;
        self.lambda_compared += usize::from(c.lambda.is_some());
        if !c.agrees() {
            self.mismatches += 1;
            writeln!(
                self.out,
                "mismatch: order {} arcs {:?}: d_s⁻ solver {:?} oracle {:?}; Λ {:?}",
                d.order(),
                d.arcs(),
                c.ds.0,
                c.ds.1,
                c.lambda
            )
            .unwrap();
        }
        Ok(c.strong)
    }
}

fn oracle(a: &OracleArgs) -> CliResult<Outcome> {
    if !(1..=4).contains(&a.max_n) {
        return Err(CliError::Inapplicable(format!("--max-n must be between 1 and 4, got {}", a.max_n)));
    }
    if a.random > 0 && !(1..=ORACLE_MAX_ORDER).contains(&a.up_to) {
        return Err(CliError::Inapplicable(format!(
            "--up-to must be between 1 and {ORACLE_MAX_ORDER}, got {}",
            a.up_to
        )));
    }
    let mut tally = Tally { lambda_arcs: a.lambda_arcs, ..Tally::default() };
    let (mut scanned, mut strong) = (0, 0);
    for d in families::labeled_digraphs(a.max_n)? {
        scanned += 1;
        strong += usize::from(tally.add(&d)?);
    }
    let exhaustive_mismatches = tally.mismatches;
    writeln!(
        tally.out,
        "order {}: {scanned} digraphs scanned, {strong} strong, {exhaustive_mismatches} mismatches",
        a.max_n
    )
    .unwrap();

    if a.random > 0 {
        let low = (a.max_n + 1).min(a.up_to);
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        for _ in 0..a.random {
            let n = rng.gen_range(low..=a.up_to);
            let p = rng.gen_range(0.25..0.75);
            let d = families::random_strong_digraph(&mut rng, n, p)?;
            tally.add(&d)?;
        }
        writeln!(
            tally.out,
            "random: {} strong digraphs of order {low}..={} (seed {}), {} mismatches",
            a.random,
            a.up_to,
            a.seed,
            tally.mismatches - exhaustive_mismatches
        )
        .unwrap();
    }
    let Tally { mut out, mismatches, lambda_compared, .. } = tally;
    writeln!(out, "lambda comparisons: {lambda_compared}").unwrap();
    writeln!(out, "mismatches: {mismatches}").unwrap();
    let code = if mismatches == 0 { EXIT_OK } else { EXIT_NEGATIVE };
    Ok(Outcome { code, stdout: out, stderr: String::new() })
}
