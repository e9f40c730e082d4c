//! Command-line front end.
//!
//! Exit codes: 0 complete proof, 2 inconclusive candidates, 3 invalid
//! configuration or arguments, 4 internal invariant violation.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::error::Error;
use crate::known::{known_set, oracle_scan, MAX_EXPONENT};
use crate::verifier::{cross_check, CrossCheck, Verifier, VerifierConfig};

pub mod certificate;
pub mod trace;

pub use certificate::CertificateFile;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExitStatus(pub i32);

impl ExitStatus {
    pub const SUCCESS: ExitStatus = ExitStatus(0);
    pub const INCONCLUSIVE: ExitStatus = ExitStatus(2);
    pub const INVALID_CONFIG: ExitStatus = ExitStatus(3);
    pub const INTERNAL: ExitStatus = ExitStatus(4);

    pub fn code(self) -> i32 {
        self.0
    }
}

impl From<&Error> for ExitStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::InvalidConfig(_)
            | Error::KnownValue(_)
            | Error::OutOfRange { .. }
            | Error::ExponentTooLarge { .. }
            | Error::InvalidPrime(_)
            | Error::InvalidModulus(_)
            | Error::OddExponent(_) => ExitStatus::INVALID_CONFIG,
            _ => ExitStatus::INTERNAL,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "a051221",
    version,
    about = "Certify which values 10^x - y^2 occur in a bounded range"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exclude every candidate outside the known set and write a certificate.
    Verify(VerifyArgs),
    /// Print the full exclusion trace for one candidate.
    Example(ExampleArgs),
    /// Print the known values as "index value" lines.
    Known(KnownArgs),
    /// Search directly for 10^x - y^2 = c with x up to a limit.
    OracleCheck(OracleArgs),
}

#[derive(Debug, Args, Clone)]
pub struct ProofArgs {
    /// Largest candidate value.
    #[arg(long, default_value_t = 2000)]
    pub max: u64,
    /// Largest exponent enumerated by brute force.
    #[arg(long = "x-max", default_value_t = 7)]
    pub x_max: u32,
    /// Power of ten used for the zero-hit test.
    #[arg(long, default_value_t = 10_000)]
    pub modulus: u64,
    /// Primes tried in order, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "160001,1601")]
    pub primes: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Smallest candidate value.
    #[arg(long, default_value_t = 0)]
    pub min: u64,
    #[command(flatten)]
    pub proof: ProofArgs,
    /// Exponent limit of the cross-check scan.
    #[arg(long = "oracle-x-max", default_value_t = MAX_EXPONENT)]
    pub oracle_x_max: u32,
    /// Certificate output path.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Suppress the summary line.
    #[arg(long)]
    pub quiet: bool,
}

#[derive(Debug, Args)]
pub struct ExampleArgs {
    #[arg(long)]
    pub c: u64,
    #[command(flatten)]
    pub proof: ProofArgs,
}

#[derive(Debug, Args)]
pub struct KnownArgs {
    #[arg(long, default_value_t = 2000)]
    pub max: u64,
    #[arg(long = "x-max", default_value_t = 7)]
    pub x_max: u32,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    /// Single value to check; overrides --min/--max.
    #[arg(long)]
    pub c: Option<u64>,
    #[arg(long, default_value_t = 0)]
    pub min: u64,
    #[arg(long, default_value_t = 2000)]
    pub max: u64,
    #[arg(long = "x-max", default_value_t = MAX_EXPONENT)]
    pub x_max: u32,
}

impl ProofArgs {
    fn config(&self, min: u64, oracle_x_limit: u32) -> VerifierConfig {
        VerifierConfig {
            value_min: min,
            value_bound: self.max,
            known_x_max: self.x_max,
            modulus_n: self.modulus,
            primes: self.primes.clone(),
            oracle_x_limit,
        }
    }
}

/// Parses `args` and runs the chosen subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                ExitStatus::INVALID_CONFIG
            } else {
                let _ = write!(out, "{e}");
                ExitStatus::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(&args, out, err),
        Command::Example(args) => cmd_example(&args, out, err),
        Command::Known(args) => cmd_known(&args, out),
        Command::OracleCheck(args) => cmd_oracle_check(&args, out),
    };
    match result {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            ExitStatus::from(&e)
        }
    }
}

fn write_output(path: &Option<PathBuf>, text: &str, out: &mut dyn Write) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::InvalidConfig(format!("cannot write {}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| Error::InvalidConfig(format!("cannot write output: {e}"))),
    }
}

fn format_pairs(pairs: &[crate::pell::FundamentalPair]) -> String {
    pairs
        .iter()
        .map(|p| format!("({},{})", p.a, p.b))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn cmd_verify(
    args: &VerifyArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<ExitStatus, Error> {
    let config = args.proof.config(args.min, args.oracle_x_max);
    let verifier = Verifier::new(config.clone())?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        if jobs == 0 {
            return Err(Error::InvalidConfig("--jobs must be at least 1".into()));
        }
        pool = pool.num_threads(jobs);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::InvalidConfig(format!("thread pool: {e}")))?;
    let report = pool.install(|| verifier.verify())?;

    if let Some(path) = &args.out {
        write_output(&Some(path.clone()), &CertificateFile::from_report(&report).to_json(), out)?;
    }

    let audit = cross_check(&report, &config)?;
    let inconclusive = report.inconclusive_pairs();
    if !args.quiet {
        let _ = writeln!(
            out,
            "checked {} candidates in [{}, {}]: {} excluded, {} inconclusive; fallback pairs ({}): {}; cross-check {}",
            report.candidates_checked,
            config.value_min,
            config.value_bound,
            report.excluded_count(),
            report.candidates_checked - report.excluded_count(),
            report.fallback_pairs.len(),
            format_pairs(&report.fallback_pairs),
            if audit.passed() { "passed" } else { "FAILED" },
        );
    }
    match audit {
        CrossCheck::Passed => {}
        other => {
            let _ = writeln!(err, "cross-check failed: {other:?}");
            return Ok(ExitStatus::INTERNAL);
        }
    }
    if !inconclusive.is_empty() {
        let _ = writeln!(
            err,
            "inconclusive pairs ({}): {}",
            inconclusive.len(),
            format_pairs(&inconclusive)
        );
        return Ok(ExitStatus::INCONCLUSIVE);
    }
    Ok(ExitStatus::SUCCESS)
}

pub fn cmd_example(
    args: &ExampleArgs,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<ExitStatus, Error> {
    let verifier = Verifier::new(args.proof.config(0, MAX_EXPONENT))?;
    if verifier.known().contains(args.c) {
        let _ = writeln!(
            err,
            "{} is in the known list (10^x - y^2 with x <= {})",
            args.c, args.proof.x_max
        );
        return Ok(ExitStatus::INVALID_CONFIG);
    }
    let text = trace::example_trace(&verifier, args.c)?;
    write_output(&None, &text, out)?;
    if text.ends_with("inconclusive\n") {
        Ok(ExitStatus::INCONCLUSIVE)
    } else {
        Ok(ExitStatus::SUCCESS)
    }
}

pub fn cmd_known(args: &KnownArgs, out: &mut dyn Write) -> Result<ExitStatus, Error> {
    let set = known_set(args.x_max, args.max)?;
    write_output(&args.out, &set.to_bfile(), out)?;
    Ok(ExitStatus::SUCCESS)
}

pub fn cmd_oracle_check(args: &OracleArgs, out: &mut dyn Write) -> Result<ExitStatus, Error> {
    let (lo, hi) = match args.c {
        Some(c) => (c, c),
        None => (args.min, args.max),
    };
    if lo > hi {
        return Err(Error::InvalidConfig(format!("minimum {lo} exceeds maximum {hi}")));
    }
    for c in lo..=hi {
        let line = match oracle_scan(c, args.x_max)? {
            Some(r) => format!("{c}: witness x={} y={}", r.x, r.y),
            None => format!("{c}: no representation with x <= {}", args.x_max),
        };
        let _ = writeln!(out, "{line}");
    }
    Ok(ExitStatus::SUCCESS)
}
