//! Command-line surface over `cp2q-core`.
//!
//! Every subcommand builds a [`Report`] that renders as a table, versioned
//! JSON or CSV. Exit codes: 0 success, 2 verification failure, 3 resource
//! limit, 4 parse or usage error.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use cp2q_core::Error;

mod commands;
pub mod output;

pub use output::{Format, Report};

/// Environment variable bounding the number of terms in any intermediate
/// polynomial.
pub const MAX_TERMS_VAR: &str = "CP2Q_MAX_TERMS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "cp2q", version, about = "Exact and certified computations on the quantum projective plane")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Deformation parameter for numeric evaluation, as a rational ("1/2") or decimal.
    #[arg(long = "q", global = true, default_value = "1/2")]
    pub q: String,
    /// Fixed truncation level for numeric pairings (chosen automatically when absent).
    #[arg(long, global = true)]
    pub cutoff: Option<usize>,
    /// Tolerance for certified numeric results.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    /// Minimum degree bound for ideal-membership zero tests.
    #[arg(long, global = true, default_value_t = 0)]
    pub degree_bound: usize,
    /// Seed for randomized property checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ChargeArg {
    /// Monopole charge N.
    #[arg(short = 'N', long = "charge", allow_negative_numbers = true)]
    pub n: i32,
}

#[derive(Args, Debug, Clone)]
pub struct ExprArg {
    /// Polynomial in the generators, e.g. "p[1][2]" or "{q} u[3][1]* u[3][2]".
    #[arg(long)]
    pub expr: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Defining relations, Hopf action identities and rewriting confluence.
    #[command(subcommand)]
    Relations(RelationsCmd),
    /// Monopole projections P_N.
    #[command(subcommand)]
    Projection(ProjectionCmd),
    /// Haar state of an expression.
    Haar(ExprArg),
    /// Dirac and Laplacian spectra.
    #[command(subcommand)]
    Spectrum(SpectrumCmd),
    /// Index pairings with the monopole projections.
    #[command(subcommand)]
    Pairing(PairingCmd),
    /// Quantum Chern numbers relative to N = 1.
    #[command(subcommand)]
    Chern(ChernCmd),
    /// Dolbeault operators, 1-form decomposition and the involution J.
    #[command(subcommand)]
    Calculus(CalculusCmd),
}

#[derive(Subcommand, Debug)]
pub enum RelationsCmd {
    Verify {
        /// Largest overlap degree in the confluence check.
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Number of random samples for associativity and star checks.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ProjectionCmd {
    /// The components of Ψ_N.
    Build(ChargeArg),
    /// Gram identity, idempotency, self-adjointness and covariance.
    Verify(ChargeArg),
    /// Entries of P_N.
    Dump(ChargeArg),
}

#[derive(Subcommand, Debug)]
pub enum SpectrumCmd {
    Dirac {
        #[arg(long)]
        n_max: i64,
    },
    Laplacian {
        #[command(flatten)]
        charge: ChargeArg,
        #[arg(long)]
        n_max: i64,
    },
    /// Levels where λ_{n,N} and λ_{n,-N} differ.
    Asymmetry {
        #[command(flatten)]
        charge: ChargeArg,
        #[arg(long, default_value_t = 5)]
        n_max: i64,
    },
    /// Partial sums of Tr (1+D²)^{-ε} with a geometric tail bound.
    Summability {
        #[arg(long)]
        epsilon: f64,
        /// Fixed number of levels; doubled from 10 until the tail is below --tol when absent.
        #[arg(long)]
        n_max: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum PairingCmd {
    Rank(ChargeArg),
    Charge(ChargeArg),
    /// Integer pairings of rank, charge and instanton number with [1], [P_-1], [P_1].
    Matrix,
    /// Haar state of the twisted trace of P_N.
    Equivariant(ChargeArg),
    /// Reference instanton number and the literal truncated evaluation.
    InstantonRef(ChargeArg),
}

#[derive(Subcommand, Debug)]
pub enum ChernCmd {
    Q2(ChargeArg),
    Q4(ChargeArg),
}

#[derive(Subcommand, Debug)]
pub enum CalculusCmd {
    Dbar(ExprArg),
    Del(ExprArg),
    /// Coefficients of da along dp_ij and the reconstruction residual.
    Decompose(ExprArg),
    /// J² = (-1)^{2ℓ} on components built from the expression.
    JCheck(ExprArg),
}

/// Settings shared by all subcommands.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub q0_text: String,
    pub q0: f64,
    pub cutoff: Option<usize>,
    pub tolerance: f64,
    pub degree_bound: usize,
    pub format: Format,
    pub seed: u64,
    pub max_terms: usize,
}

/// Parses `a/b` or a decimal and checks `0 < q0 < 1`.
pub fn parse_q0(text: &str) -> Result<f64, String> {
    let t = text.trim();
    let value = match t.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| format!("bad numerator in q0 = {text:?}"))?;
            let b: f64 = b.trim().parse().map_err(|_| format!("bad denominator in q0 = {text:?}"))?;
            a / b
        }
        None => t.parse().map_err(|_| format!("q0 = {text:?} is not a number"))?,
    };
    if value > 0.0 && value < 1.0 {
        Ok(value)
    } else {
        Err(format!("q0 = {text} is outside the open interval (0, 1)"))
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse { source: String, message: String, start: usize, end: usize },
    Core(Error),
    /// A report was produced but one of its checks failed.
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Parse { .. } => EXIT_PARSE,
            Failure::Core(Error::ResourceLimit(_)) => EXIT_RESOURCE,
            Failure::Core(Error::Parse { .. } | Error::QOutOfRange(_) | Error::NegativeArgument { .. }) => EXIT_PARSE,
            Failure::Core(Error::Precondition(_) | Error::Arity { .. }) => EXIT_PARSE,
            Failure::Core(_) | Failure::Verification => EXIT_VERIFICATION,
        }
    }

    fn render(&self, err: &mut dyn Write) -> std::io::Result<()> {
        match self {
            Failure::Usage(m) => writeln!(err, "error: {m}"),
            Failure::Parse { source, message, start, end } => {
                writeln!(err, "error: {message}")?;
                writeln!(err, "  | {source}")?;
                let pad = source.get(..*start).map_or(*start, |s| s.chars().count());
                let width = source.get(*start..*end).map_or(1, |s| s.chars().count()).max(1);
                writeln!(err, "  | {}{} at {start}..{end}", " ".repeat(pad), "^".repeat(width))
            }
            Failure::Core(e) => writeln!(err, "error: {e}"),
            Failure::Verification => writeln!(err, "error: verification failed"),
        }
    }
}

fn max_terms(env: Option<String>) -> Result<usize, Failure> {
    match env {
        None => Ok(cp2q_core::ncalg::DEFAULT_MAX_TERMS),
        Some(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|n| *n > 0)
            .ok_or_else(|| Failure::Usage(format!("{MAX_TERMS_VAR} = {v:?} is not a positive integer"))),
    }
}

/// Runs one invocation and returns the exit code. `max_terms_env` is the value
/// of [`MAX_TERMS_VAR`], if set.
pub fn run<I, T>(args: I, max_terms_env: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let outcome = configure(&cli, max_terms_env).and_then(|cfg| {
        let report = commands::dispatch(&cli.command, &cfg)?;
        match report.write(cfg.format, out) {
            Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => return Ok(()),
            other => other.map_err(|e| Failure::Usage(format!("cannot write output: {e}")))?,
        }
        if report.passed {
            Ok(())
        } else {
            Err(Failure::Verification)
        }
    });
    match outcome {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = f.render(err);
            f.exit_code()
        }
    }
}

fn configure(cli: &Cli, max_terms_env: Option<String>) -> Result<RunConfig, Failure> {
    let q0 = parse_q0(&cli.q).map_err(Failure::Usage)?;
    if !(cli.tol > 0.0) {
        return Err(Failure::Usage(format!("tolerance must be positive, got {}", cli.tol)));
    }
    Ok(RunConfig {
        q0_text: cli.q.trim().to_string(),
        q0,
        cutoff: cli.cutoff,
        tolerance: cli.tol,
        degree_bound: cli.degree_bound,
        format: cli.format,
        seed: cli.seed,
        max_terms: max_terms(max_terms_env)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q0_parsing() {
        assert_eq!(parse_q0("1/2"), Ok(0.5));
        assert_eq!(parse_q0(" 3/10 "), Ok(0.3));
        assert_eq!(parse_q0("0.8"), Ok(0.8));
        assert!(parse_q0("1").is_err());
        assert!(parse_q0("3/2").is_err());
        assert!(parse_q0("0").is_err());
        assert!(parse_q0("a/2").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Failure::Core(Error::ResourceLimit("x".into())).exit_code(), EXIT_RESOURCE);
        assert_eq!(Failure::Core(Error::Parse { message: "x".into(), start: 0, end: 1 }).exit_code(), EXIT_PARSE);
        assert_eq!(Failure::Core(Error::NoConvergence("x".into())).exit_code(), EXIT_VERIFICATION);
        assert_eq!(Failure::Verification.exit_code(), EXIT_VERIFICATION);
        assert!(max_terms(Some("0".into())).is_err());
        assert_eq!(max_terms(Some("12".into())).unwrap(), 12);
    }
}
