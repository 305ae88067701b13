//! Command-line front end.
//!
//! Exit codes: 0 success, 1 property failure (`verify`), 2 unknown
//! name/op/suite, 3 bad parameters, 4 unparsable input, 5 violated
//! precondition. Output is assembled in memory and only written on success,
//! so failing invocations print nothing on stdout.

pub mod format;
pub mod verify;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::alpha::{a085058_sequence, alpha, alpha_inverse, ruler_sequence};
use crate::bell::BellTable;
use crate::darcais::{a010815, darcais_product, partition_numbers, sigma_sequence, tau_values};
use crate::dirichlet::{dirichlet_mul, f_transform};
use crate::error::Error;
use crate::phi::{phi_inverse_minus, phi_inverse_plus, phi_minus, phi_plus};
use crate::ring::{RingTag, RingValue};
use crate::series::{cauchy_inv, cauchy_mul, gamma, gamma_inv, hurwitz_mul, Seq};

pub use format::{format_seq, format_values, parse_seq, parse_value, InputFormat, OutputFormat, ParseError, RingArg};

pub const SEQUENCES: [&str; 8] = ["q", "r", "partitions", "ptilde", "a010815", "sigma", "tau", "darcais"];

pub const TRANSFORMS: [&str; 14] = [
    "phi",
    "phi-minus",
    "phi-inv",
    "phi-inv-minus",
    "alpha",
    "alpha-inv",
    "cauchy-mul",
    "cauchy-inv",
    "hurwitz-mul",
    "gamma",
    "gamma-inv",
    "dirichlet-mul",
    "f-transform",
    "bell",
];

#[derive(Debug, Parser)]
#[command(name = "seqcalc", version, about = "Exact sequence transforms, D'Arcais polynomials and Ramanujan tau")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Human,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first terms of a named sequence.
    Seq {
        /// q, r, partitions, ptilde, a010815, sigma, tau or darcais
        name: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value = "bfile")]
        format: OutputFormat,
    },
    /// Apply a transform to one or two input sequences.
    Transform {
        op: String,
        /// Input files; `-` or nothing reads stdin. Binary ops take two.
        inputs: Vec<PathBuf>,
        #[arg(long, value_enum, default_value = "int")]
        ring: RingArg,
        /// Number of output terms.
        #[arg(long)]
        terms: Option<usize>,
        #[arg(long, value_enum, default_value = "bfile")]
        format: OutputFormat,
        #[arg(long, value_enum, default_value = "plain")]
        input_format: InputFormat,
        /// `bell`: partial Bell column k instead of complete Bell values.
        #[arg(long)]
        k: Option<usize>,
        /// `bell`: exponential instead of ordinary Bell values.
        #[arg(long)]
        exponential: bool,
    },
    /// Run a property suite: iso, tau-mult, f-hom or darcais-triple.
    Verify {
        suite: String,
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum, default_value = "human")]
        format: ReportFormat,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// What a CLI invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout: stdout.into_bytes(), stderr: String::new() }
    }
}

#[derive(Debug)]
enum Failure {
    Unknown(String),
    Param(String),
    Parse(String),
    Precondition(Error),
}

impl Failure {
    fn into_outcome(self) -> Outcome {
        let (code, msg) = match self {
            Failure::Unknown(m) => (2, m),
            Failure::Param(m) => (3, format!("invalid parameter: {m}")),
            Failure::Parse(m) => (4, format!("parse error: {m}")),
            Failure::Precondition(e) => (5, format!("precondition violated: {e}")),
        };
        Outcome { code, stdout: Vec::new(), stderr: format!("seqcalc: {msg}\n") }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Precondition(e)
    }
}

/// Run the CLI on `args` (including the program name), reading `-` inputs
/// from `stdin`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome::ok(e.to_string()),
                ErrorKind::InvalidSubcommand => {
                    Outcome { code: 2, stdout: Vec::new(), stderr: e.to_string() }
                }
                _ => Outcome { code: 3, stdout: Vec::new(), stderr: e.to_string() },
            };
        }
    };
    let result = match cli.command {
        Command::Seq { name, terms, format } => cmd_seq(&name, terms, format),
        Command::Transform { op, inputs, ring, terms, format, input_format, k, exponential } => {
            let opts = TransformOpts { ring: ring.into(), terms, input_format, k, exponential };
            cmd_transform(&op, &inputs, &opts, stdin).map(|values| format_values(&values, format))
        }
        Command::Verify { suite, bound, format, seed } => return cmd_verify(&suite, bound, format, seed),
    };
    match result {
        Ok(out) => Outcome::ok(out),
        Err(f) => f.into_outcome(),
    }
}

fn cmd_seq(name: &str, terms: usize, format: OutputFormat) -> Result<String, Failure> {
    if !SEQUENCES.contains(&name) {
        return Err(Failure::Unknown(format!("unknown sequence {name:?}; expected one of {}", SEQUENCES.join(", "))));
    }
    if terms == 0 {
        return Err(Failure::Param("--terms must be at least 1".into()));
    }
    let values: Vec<RingValue> = match name {
        "q" => ruler_sequence(terms)?.into_terms(),
        "r" => a085058_sequence(terms)?.into_terms(),
        "partitions" => partition_numbers(terms)?.into_terms(),
        "ptilde" => phi_plus(&a085058_sequence((terms - 1).max(1))?, terms)?.into_terms(),
        "a010815" => a010815(terms)?.into_terms(),
        "sigma" => sigma_sequence(terms)?.into_terms(),
        "tau" => tau_values(terms)?.into_iter().map(|t| RingValue::Int(t.value)).collect(),
        "darcais" => darcais_product(terms)?.into_iter().map(|p| RingValue::Poly(p.poly)).collect(),
        _ => unreachable!(),
    };
    Ok(format_values(&values, format))
}

struct TransformOpts {
    ring: RingTag,
    terms: Option<usize>,
    input_format: InputFormat,
    k: Option<usize>,
    exponential: bool,
}

fn read_input(path: &PathBuf, opts: &TransformOpts, stdin: &mut dyn Read) -> Result<Seq, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        stdin.read_to_string(&mut text).map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    }
    parse_seq(&text, opts.ring, opts.input_format).map_err(|e| Failure::Parse(e.0))
}

fn is_binary(op: &str) -> bool {
    matches!(op, "cauchy-mul" | "hurwitz-mul" | "dirichlet-mul")
}

/// Cut `seq` to `--terms` when given; asking for more terms than the
/// transform produced is a precondition violation.
fn limit(seq: Seq, terms: Option<usize>) -> Result<Seq, Failure> {
    match terms {
        Some(n) if n > seq.len() => Err(Error::InsufficientInput { needed: n, available: seq.len() }.into()),
        Some(n) => Ok(seq.truncate(n)),
        None => Ok(seq),
    }
}

fn cmd_transform(
    op: &str,
    inputs: &[PathBuf],
    opts: &TransformOpts,
    stdin: &mut dyn Read,
) -> Result<Vec<RingValue>, Failure> {
    if !TRANSFORMS.contains(&op) {
        return Err(Failure::Unknown(format!("unknown transform {op:?}; expected one of {}", TRANSFORMS.join(", "))));
    }
    if opts.terms == Some(0) {
        return Err(Failure::Param("--terms must be at least 1".into()));
    }
    let arity = if is_binary(op) { 2 } else { 1 };
    let stdin_path = PathBuf::from("-");
    let paths: Vec<&PathBuf> = match (inputs.len(), arity) {
        (0, 1) => vec![&stdin_path],
        (n, a) if n == a => inputs.iter().collect(),
        (n, a) => return Err(Failure::Param(format!("{op} takes {a} input(s), got {n}"))),
    };
    if paths.iter().filter(|p| p.as_os_str() == "-").count() > 1 {
        return Err(Failure::Param("stdin can be used for at most one input".into()));
    }
    let seqs = paths.iter().map(|p| read_input(p, opts, stdin)).collect::<Result<Vec<_>, _>>()?;
    let a = &seqs[0];
    let terms = opts.terms;

    let out = match op {
        "phi" => phi_plus(a, terms.unwrap_or(a.len() + 1))?,
        "phi-minus" => phi_minus(a, terms.unwrap_or(a.len() + 1))?,
        "phi-inv" => limit(phi_inverse_plus(a)?, terms)?,
        "phi-inv-minus" => limit(phi_inverse_minus(a)?, terms)?,
        "alpha" => alpha(a, terms.unwrap_or(a.len()))?,
        "alpha-inv" => limit(alpha_inverse(a), terms)?,
        "cauchy-mul" => limit(cauchy_mul(a, &seqs[1])?, terms)?,
        "cauchy-inv" => limit(cauchy_inv(a)?, terms)?,
        "hurwitz-mul" => limit(hurwitz_mul(a, &seqs[1])?, terms)?,
        "gamma" => limit(gamma(a), terms)?,
        "gamma-inv" => limit(gamma_inv(a)?, terms)?,
        "dirichlet-mul" => limit(dirichlet_mul(a, &seqs[1])?, terms)?,
        "f-transform" => f_transform(a, terms.unwrap_or(a.len()))?,
        "bell" => {
            let n = terms.unwrap_or(a.len());
            let table = if opts.exponential { BellTable::exponential(a, n)? } else { BellTable::ordinary(a, n)? };
            let values = (1..=n)
                .map(|row| match opts.k {
                    Some(k) => table.get(row, k),
                    None => table.complete(row),
                })
                .collect();
            Seq::new(a.ring(), values)?
        }
        _ => unreachable!(),
    };
    Ok(out.into_terms())
}

fn cmd_verify(suite: &str, bound: Option<usize>, format: ReportFormat, seed: u64) -> Outcome {
    let bound = bound.unwrap_or_else(|| verify::default_bound(suite));
    if verify::SUITES.contains(&suite) && bound < 2 {
        return Failure::Param("--bound must be at least 2".into()).into_outcome();
    }
    let report = match verify::run_suite(suite, bound, seed) {
        None => {
            return Failure::Unknown(format!(
                "unknown suite {suite:?}; expected one of {}",
                verify::SUITES.join(", ")
            ))
            .into_outcome()
        }
        Some(Err(e)) => return Failure::Precondition(e).into_outcome(),
        Some(Ok(r)) => r,
    };
    let text = match format {
        ReportFormat::Human => report.human(),
        ReportFormat::Json => format!("{}\n", report.json()),
    };
    let mut out = Outcome::ok(text);
    if !report.passes() {
        out.code = 1;
    }
    out
}
