//! Command-line front end. Reports go to stdout (or `--output`) as JSON; a
//! one-line summary goes to stderr.

use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::corpus::{generate_corpus, sweep, CorpusConfig};
use crate::element_set::ElementSet;
use crate::logconcavity::{certify_clc_matroid, certify_clc_quadratic_criterion, spectral_nd_report};
use crate::mason::{check_ultra_log_concave, mason_report};
use crate::matroid::{AxiomViolation, Matroid, MatroidError, MatroidSpec, DEFAULT_ENUMERATION_BOUND};
use crate::polynomial::{bases_polynomial, independence_polynomial, SparsePolynomial};

pub const SCHEMA_VERSION: u32 = 1;
pub const ENUMERATION_BOUND_ENV: &str = "MASON_CLC_ENUM_BOUND";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERDICT_FAILED: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Debug, Clone, Parser)]
#[command(name = "mason-clc", version, about = "Matroid log-concavity checks with exact certificates")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Largest ground set whose independent sets may be enumerated (at most 24).
    #[arg(long, global = true, env = ENUMERATION_BOUND_ENV, default_value_t = DEFAULT_ENUMERATION_BOUND)]
    pub enumeration_bound: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Tolerance for the floating-point diagnostics.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tolerance: f64,
    /// Seed for every random choice; echoed in the report.
    #[arg(long, global = true, default_value_t = 7)]
    pub seed: u64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the matroid axioms.
    Validate(MatroidInput),
    /// Independent-set counts and their log-concavity forms.
    RankSequence(MatroidInput),
    /// Counts, certificate and 2x2 minors, with the consistency chain.
    Mason(MatroidInput),
    /// Complete log-concavity certificate for a matroid or a polynomial.
    CertifyClc(Source),
    /// Eigenvalues of the Hessian of log f at a point.
    Spectral(SpectralArgs),
    /// Generate the corpus and run every check over it.
    Corpus(CorpusArgs),
}

#[derive(Debug, Clone, Args)]
pub struct MatroidInput {
    /// Matroid JSON file.
    #[arg(long)]
    pub input: PathBuf,
}

#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// Matroid JSON file; the independence polynomial is used.
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Polynomial JSON file.
    #[arg(long)]
    pub poly: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SpectralArgs {
    #[command(flatten)]
    pub source: Source,
    /// Comma-separated coordinates such as `1,1/2,3`; defaults to all ones.
    #[arg(long)]
    pub point: Option<String>,
    /// Use the bases polynomial of the matroid instead of its independence polynomial.
    #[arg(long)]
    pub bases: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CorpusArgs {
    #[arg(long, default_value_t = 5)]
    pub graphic_max_vertices: usize,
    #[arg(long, default_value_t = 12)]
    pub uniform_max_n: usize,
    #[arg(long, default_value_t = 500)]
    pub linear_count: usize,
    #[arg(long, default_value_t = 200)]
    pub explicit_count: usize,
}

/// What a run produced: the exit code, the JSON report and a human summary.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub exit_code: i32,
    pub report: Value,
    pub summary: String,
}

impl RunOutcome {
    pub fn json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        text.push('\n');
        text
    }
}

struct InputError {
    kind: &'static str,
    message: String,
}

impl InputError {
    fn new(kind: &'static str, message: impl ToString) -> Self {
        InputError {
            kind,
            message: message.to_string(),
        }
    }
}

impl From<MatroidError> for InputError {
    fn from(e: MatroidError) -> Self {
        InputError::new("matroid", e)
    }
}

impl RunConfig {
    fn command_name(&self) -> &'static str {
        match self.command {
            Command::Validate(_) => "validate",
            Command::RankSequence(_) => "rank-sequence",
            Command::Mason(_) => "mason",
            Command::CertifyClc(_) => "certify-clc",
            Command::Spectral(_) => "spectral",
            Command::Corpus(_) => "corpus",
        }
    }

    fn envelope(&self, body: (&str, Value)) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command_name(),
            "seed": self.seed,
            body.0: body.1,
        })
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError::new("io", format!("{}: {e}", path.display())))
}

fn read_spec(path: &Path) -> Result<MatroidSpec, InputError> {
    serde_json::from_str(&read(path)?).map_err(|e| InputError::new("parse", format!("{}: {e}", path.display())))
}

fn read_matroid(path: &Path, bound: usize) -> Result<Matroid, InputError> {
    Ok(read_spec(path)?.build()?.with_enumeration_bound(bound)?)
}

fn read_polynomial(path: &Path) -> Result<SparsePolynomial, InputError> {
    serde_json::from_str(&read(path)?).map_err(|e| InputError::new("parse", format!("{}: {e}", path.display())))
}

fn parse_point(text: &str) -> Result<Vec<BigRational>, InputError> {
    text.split(',')
        .map(|s| BigRational::from_str(s.trim()).map_err(|_| InputError::new("parse", format!("bad coordinate {s:?}"))))
        .collect()
}

/// Independent re-check of an axiom violation against the listed sets.
fn violation_holds(sets: &[Vec<usize>], violation: &AxiomViolation) -> bool {
    let family: HashSet<ElementSet> = sets.iter().map(|s| ElementSet::from_elements(s.iter().copied())).collect();
    match *violation {
        AxiomViolation::DownwardClosure { subset, superset } => {
            subset.is_subset(superset) && family.contains(&superset) && !family.contains(&subset)
        }
        AxiomViolation::Exchange { small, large } => {
            family.contains(&small)
                && family.contains(&large)
                && small.len() < large.len()
                && large.difference(small).iter().all(|x| !family.contains(&small.with(x)))
        }
    }
}

fn violation_json(v: &AxiomViolation) -> Value {
    match v {
        AxiomViolation::DownwardClosure { subset, superset } => json!({
            "axiom": "downward-closure",
            "subset": subset,
            "superset": superset,
        }),
        AxiomViolation::Exchange { small, large } => json!({
            "axiom": "exchange",
            "small": small,
            "large": large,
        }),
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

type Outcome = Result<(i32, Value, String), InputError>;

fn validate(config: &RunConfig, input: &Path) -> Outcome {
    let spec = read_spec(input)?;
    match spec.build().and_then(|m| m.with_enumeration_bound(config.enumeration_bound)) {
        Ok(m) => Ok((
            EXIT_OK,
            json!({ "valid": true, "n": m.size(), "rank": m.rank() }),
            format!("valid matroid on {} elements of rank {}", m.size(), m.rank()),
        )),
        Err(MatroidError::AxiomViolation(v)) => {
            let MatroidSpec::Explicit { sets, .. } = &spec else {
                unreachable!("only explicit families can violate the axioms")
            };
            assert!(violation_holds(sets, &v), "axiom witness failed re-check: {v}");
            Ok((
                EXIT_VERDICT_FAILED,
                json!({ "valid": false, "violation": violation_json(&v) }),
                format!("not a matroid: {v}"),
            ))
        }
        Err(MatroidError::EmptyFamily) => Ok((
            EXIT_VERDICT_FAILED,
            json!({ "valid": false, "violation": { "axiom": "nonempty" } }),
            "not a matroid: the family is empty".to_string(),
        )),
        Err(e) => Err(e.into()),
    }
}

fn certify(config: &RunConfig, source: &Source) -> Outcome {
    let (cert, f) = match (&source.input, &source.poly) {
        (Some(path), _) => {
            let m = read_matroid(path, config.enumeration_bound)?;
            let cert = certify_clc_matroid(&m).map_err(|e| InputError::new("matroid", e))?;
            let f = if cert.is_accepted() {
                None
            } else {
                Some(independence_polynomial(&m)?)
            };
            (cert, f)
        }
        (None, Some(path)) => {
            let f = read_polynomial(path)?;
            let cert = certify_clc_quadratic_criterion(&f).map_err(|e| InputError::new("polynomial", e))?;
            (cert, Some(f))
        }
        (None, None) => return Err(InputError::new("usage", "one of --input or --poly is required")),
    };
    let quadratics = cert.checks.iter().filter(|c| c.matrix.is_some()).count();
    if cert.is_accepted() {
        let summary = format!("accepted: {} checks, {} quadratic", cert.checks.len(), quadratics);
        return Ok((EXIT_OK, to_value(&cert), summary));
    }
    let f = f.expect("rejections come with the polynomial");
    assert!(cert.verify_failure(&f), "certificate witness failed re-check");
    let mut report = to_value(&cert);
    report["witness_verified"] = Value::Bool(true);
    let alpha = &cert.failure_witness.as_ref().expect("rejected").alpha;
    Ok((EXIT_VERDICT_FAILED, report, format!("rejected at alpha = {alpha:?}")))
}

fn spectral(config: &RunConfig, args: &SpectralArgs) -> Outcome {
    let f = match (&args.source.input, &args.source.poly) {
        (Some(path), _) => {
            let m = read_matroid(path, config.enumeration_bound)?;
            if args.bases {
                bases_polynomial(&m)?
            } else {
                independence_polynomial(&m)?
            }
        }
        (None, Some(path)) => read_polynomial(path)?,
        (None, None) => return Err(InputError::new("usage", "one of --input or --poly is required")),
    };
    let point = match &args.point {
        Some(text) => parse_point(text)?,
        None => vec![BigRational::from_integer(1.into()); f.nvars()],
    };
    let report = spectral_nd_report(&f, &point, config.tolerance).map_err(|e| InputError::new("polynomial", e))?;
    let ok = report.max_eigenvalue <= config.tolerance;
    let summary = format!("largest eigenvalue {:e}", report.max_eigenvalue);
    Ok((if ok { EXIT_OK } else { EXIT_VERDICT_FAILED }, to_value(&report), summary))
}

fn corpus(config: &RunConfig, args: &CorpusArgs) -> Outcome {
    let corpus_config = CorpusConfig {
        graphic_max_vertices: args.graphic_max_vertices,
        uniform_max_n: args.uniform_max_n,
        linear_count: args.linear_count,
        explicit_count: args.explicit_count,
        seed: config.seed,
        ..CorpusConfig::default()
    };
    if corpus_config.graphic_max_vertices > 6 || corpus_config.uniform_max_n > config.enumeration_bound {
        return Err(InputError::new("usage", "corpus parameters exceed the enumeration limits"));
    }
    let entries = generate_corpus(&corpus_config)?;
    let summary = sweep(&entries, &corpus_config, config.tolerance).map_err(|e| InputError::new("sweep", e))?;
    let text = format!("{} matroids, {} failures", summary.total, summary.failures.len());
    let code = if summary.failures.is_empty() { EXIT_OK } else { EXIT_VERDICT_FAILED };
    Ok((code, to_value(&summary), text))
}

fn dispatch(config: &RunConfig) -> Outcome {
    if config.enumeration_bound > crate::matroid::MAX_ENUMERATION_BOUND {
        return Err(MatroidError::BoundTooLarge(config.enumeration_bound).into());
    }
    match &config.command {
        Command::Validate(a) => validate(config, &a.input),
        Command::RankSequence(a) => {
            let m = read_matroid(&a.input, config.enumeration_bound)?;
            let counts: Vec<i64> = m.count_independent_by_size()?.into_iter().map(|c| c as i64).collect();
            let report = check_ultra_log_concave(&counts, m.size()).map_err(|e| InputError::new("sequence", e))?;
            let code = if report.ultra { EXIT_OK } else { EXIT_VERDICT_FAILED };
            Ok((code, to_value(&report), format!("sequence {:?}, ultra log-concave: {}", report.sequence, report.ultra)))
        }
        Command::Mason(a) => {
            let m = read_matroid(&a.input, config.enumeration_bound)?;
            let report = mason_report(&m).map_err(|e| InputError::new("matroid", e))?;
            let code = if report.all_hold() { EXIT_OK } else { EXIT_VERDICT_FAILED };
            let text = format!(
                "sequence {:?}, ultra log-concave: {}, certificate: {:?}, consistent: {}",
                report.sequence.sequence, report.sequence.ultra, report.certificate.verdict, report.consistent
            );
            Ok((code, to_value(&report), text))
        }
        Command::CertifyClc(s) => certify(config, s),
        Command::Spectral(a) => spectral(config, a),
        Command::Corpus(a) => corpus(config, a),
    }
}

pub fn run(config: &RunConfig) -> RunOutcome {
    match dispatch(config) {
        Ok((exit_code, result, summary)) => RunOutcome {
            exit_code,
            report: config.envelope(("result", result)),
            summary,
        },
        Err(e) => RunOutcome {
            exit_code: EXIT_INPUT_ERROR,
            report: config.envelope(("error", json!({ "kind": e.kind, "message": e.message }))),
            summary: format!("error ({}): {}", e.kind, e.message),
        },
    }
}

/// Parses `args`, runs, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let outcome = run(&config);
    let text = outcome.json();
    match &config.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_INPUT_ERROR;
            }
        }
        None => print!("{text}"),
    }
    eprintln!("{}", outcome.summary);
    outcome.exit_code
}
