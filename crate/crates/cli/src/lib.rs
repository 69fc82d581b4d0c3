//! Batch frontend for the `nullstellensatz` kernel: reads problem files,
//! runs one command and renders deterministic text output.
//!
//! Exit codes: 0 success, 1 mathematical negative, 2 usage or parse error,
//! 3 internal invariant violation.

pub mod parse;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use nullstellensatz::ffield::FiniteField;
use nullstellensatz::groebner::{buchberger, eliminate_to_x1, is_trivial, member, Ideal};
use nullstellensatz::groebner_ed::{strong_buchberger, view_shift};
use nullstellensatz::nss::{ideal_intersect, radical_member, radical_witness, solve, SolveConfig, SolveOutcome};
use nullstellensatz::poly::{PolyRing, Polynomial, TermOrder};
use nullstellensatz::ring::Field;

pub use parse::{parse_polynomial, parse_problem, FieldSpec, ParseError, ProblemFile, System};

#[derive(Debug, Parser)]
#[command(name = "nss", version, about = "Groebner bases and explicit common zeros over finite fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduced Groebner basis of the generators.
    Gb {
        file: PathBuf,
        /// `lex` or `wlex:<w1,..,wn>`.
        #[arg(long, default_value = "lex")]
        order: String,
    },
    /// Strong Groebner basis over K[x1], printed in the remaining variables.
    GbStrong { file: PathBuf },
    /// Monic generator of the ideal's intersection with K[x1].
    Eliminate { file: PathBuf },
    /// Whether the ideal is the whole ring, with a certificate if so.
    IsTrivial { file: PathBuf },
    /// Whether the `query` polynomial lies in the ideal.
    Member { file: PathBuf },
    /// Whether the `query` polynomial lies in the radical of the ideal.
    RadicalMember { file: PathBuf },
    /// Intersection of the ideals of two problem files.
    Intersect { first: PathBuf, second: PathBuf },
    /// A common zero over a finite extension, or a triviality certificate.
    Solve {
        file: PathBuf,
        /// Seed for the randomized factorization.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print one line per recursion level.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Kernel(#[from] nullstellensatz::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Kernel(nullstellensatz::Error::InvariantViolation(_)) => 3,
            _ => 2,
        }
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses command-line arguments (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Output { code: 2, stdout: String::new(), stderr: text }
            } else {
                Output { code: 0, stdout: text, stderr: String::new() }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    let mut out = String::new();
    match execute(&cli.command, &mut out) {
        Ok(code) => Output { code, stdout: out, stderr: String::new() },
        Err(e) => Output { code: e.exit_code(), stdout: out, stderr: format!("error: {e}\n") },
    }
}

fn load(path: &Path) -> Result<ProblemFile, CliError> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: name.clone(), source })?;
    parse_problem(&text).map_err(|source| CliError::Parse { path: name, source })
}

fn execute(command: &Command, out: &mut String) -> Result<i32, CliError> {
    match command {
        Command::Intersect { first, second } => match (load(first)?, load(second)?) {
            (ProblemFile::Rational(a), ProblemFile::Rational(b)) => intersect(&a, &b, out),
            (ProblemFile::Prime(a), ProblemFile::Prime(b)) => intersect(&a, &b, out),
            _ => Err(CliError::Usage("both problem files must declare the same field".into())),
        },
        Command::Solve { file, seed, trace } => match load(file)? {
            ProblemFile::Rational(_) => Err(CliError::Usage(
                "solve works over finite fields only; use `field p <prime>` instead of `field q`".into(),
            )),
            ProblemFile::Prime(s) => solve_cmd(&s, *seed, *trace, out),
        },
        other => {
            let file = match other {
                Command::Gb { file, .. }
                | Command::GbStrong { file }
                | Command::Eliminate { file }
                | Command::IsTrivial { file }
                | Command::Member { file }
                | Command::RadicalMember { file } => file,
                Command::Intersect { .. } | Command::Solve { .. } => unreachable!(),
            };
            match load(file)? {
                ProblemFile::Rational(s) => single(other, &s, out),
                ProblemFile::Prime(s) => single(other, &s, out),
            }
        }
    }
}

fn single<F: Field>(command: &Command, s: &System<F>, out: &mut String) -> Result<i32, CliError> {
    let n = s.vars.len();
    let ideal = Ideal::new(&s.field, n, s.generators.clone())?;
    match command {
        Command::Gb { order, .. } => {
            let order = parse_order(order, n)?;
            let basis = buchberger(&s.field, n, &s.generators, &order)?;
            if basis.is_empty() {
                writeln!(out, "0").unwrap();
            }
            for g in basis.elements() {
                writeln!(out, "{}", g.to_string_ordered(&s.vars, &order)).unwrap();
            }
            Ok(0)
        }
        Command::GbStrong { .. } => {
            let ring = PolyRing::new(s.field.clone(), s.vars[0].clone());
            let shifted = s
                .generators
                .iter()
                .map(|g| view_shift(g).map(|p| p.map_coeffs(&ring, |c| c.clone())))
                .collect::<Result<Vec<_>, _>>()?;
            let basis = strong_buchberger(&ring, n - 1, &shifted, &TermOrder::lex(n - 1))?;
            write_polys(out, basis.elements(), &s.vars[1..]);
            Ok(0)
        }
        Command::Eliminate { .. } => {
            let p = eliminate_to_x1(&ideal)?;
            writeln!(out, "{}", PolyRing::new(s.field.clone(), s.vars[0].clone()).display(&p)).unwrap();
            Ok(0)
        }
        Command::IsTrivial { .. } => {
            let t = is_trivial(&ideal)?;
            match t.certificate {
                Some(cert) => {
                    writeln!(out, "TRIVIAL").unwrap();
                    write_certificate(out, &cert, &s.vars);
                    Ok(0)
                }
                None => {
                    writeln!(out, "NONTRIVIAL").unwrap();
                    Ok(1)
                }
            }
        }
        Command::Member { .. } => {
            let f = query(s, "member")?;
            Ok(verdict(out, member(f, &ideal)?, "MEMBER"))
        }
        Command::RadicalMember { .. } => {
            let f = query(s, "radical-member")?;
            let yes = radical_member(f, &ideal)?;
            let code = verdict(out, yes, "RADICAL MEMBER");
            if yes {
                if let Some(k) = radical_witness(f, &ideal, 10)? {
                    writeln!(out, "witness exponent {k}").unwrap();
                }
            }
            Ok(code)
        }
        Command::Intersect { .. } | Command::Solve { .. } => unreachable!(),
    }
}

fn query<'a, F: Field>(s: &'a System<F>, command: &str) -> Result<&'a Polynomial<F>, CliError> {
    s.query
        .as_ref()
        .ok_or_else(|| CliError::Usage(format!("{command} needs a `query <polynomial>` line")))
}

fn verdict(out: &mut String, yes: bool, word: &str) -> i32 {
    if yes {
        writeln!(out, "{word}").unwrap();
        0
    } else {
        writeln!(out, "NOT {word}").unwrap();
        1
    }
}

/// `lex` or `wlex:w1,..,wn`.
pub fn parse_order(spec: &str, nvars: usize) -> Result<TermOrder, CliError> {
    if spec == "lex" {
        return Ok(TermOrder::lex(nvars));
    }
    let Some(list) = spec.strip_prefix("wlex:") else {
        return Err(CliError::Usage(format!("unknown order `{spec}`; expected `lex` or `wlex:<w1,..,wn>`")));
    };
    let weights = list
        .split(',')
        .map(|w| w.trim().parse::<u64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| CliError::Usage(format!("invalid weight list `{list}`")))?;
    if weights.len() != nvars {
        return Err(CliError::Usage(format!("expected {nvars} weights, got {}", weights.len())));
    }
    Ok(TermOrder::weighted_lex(weights)?)
}

fn write_polys<R: nullstellensatz::ring::Ring>(out: &mut String, polys: &[Polynomial<R>], vars: &[String]) {
    if polys.is_empty() {
        writeln!(out, "0").unwrap();
    }
    for p in polys {
        writeln!(out, "{}", p.to_string_with(vars)).unwrap();
    }
}

fn write_certificate<F: Field>(out: &mut String, cert: &[Polynomial<F>], vars: &[String]) {
    for (i, c) in cert.iter().enumerate() {
        writeln!(out, "cert[{}] = {}", i + 1, c.to_string_with(vars)).unwrap();
    }
}

fn intersect<F: Field>(a: &System<F>, b: &System<F>, out: &mut String) -> Result<i32, CliError> {
    if a.field != b.field || a.vars != b.vars {
        return Err(CliError::Usage("both problem files must declare the same field and variables".into()));
    }
    let n = a.vars.len();
    let i = Ideal::new(&a.field, n, a.generators.clone())?;
    let j = Ideal::new(&b.field, n, b.generators.clone())?;
    write_polys(out, ideal_intersect(&i, &j)?.generators(), &a.vars);
    Ok(0)
}

fn solve_cmd(s: &System<FiniteField>, seed: u64, trace: bool, out: &mut String) -> Result<i32, CliError> {
    let ideal = Ideal::new(&s.field, s.vars.len(), s.generators.clone())?;
    let solution = solve(&ideal, &SolveConfig { seed })?;
    let code = match &solution.outcome {
        SolveOutcome::Trivial { certificate } => {
            writeln!(out, "TRIVIAL").unwrap();
            write_certificate(out, certificate, &s.vars);
            1
        }
        SolveOutcome::Point { tower, coords, verified } => {
            writeln!(out, "POINT").unwrap();
            for line in tower.describe() {
                writeln!(out, "{line}").unwrap();
            }
            let top = tower.top();
            for (name, a) in s.vars.iter().zip(coords) {
                writeln!(out, "{name} = {}", top.format_element(a)).unwrap();
            }
            if !verified {
                return Err(nullstellensatz::Error::InvariantViolation("point was not verified".into()).into());
            }
            writeln!(out, "VERIFIED").unwrap();
            0
        }
    };
    if trace {
        for line in solution.trace.lines() {
            writeln!(out, "{line}").unwrap();
        }
    }
    Ok(code)
}
