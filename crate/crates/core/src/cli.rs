//! Command-line front end.
//!
//! ```text
//! groebner gb     --ring qq --order lex --vars x,y "x^2 - y" "x*y - 1"
//! groebner nf     --ring zz --vars x,y --input ideal.txt "x*y + 5"
//! groebner member --ring zz --vars x,y --input ideal.txt "x + y"
//! ```
//!
//! For `nf` and `member` the first positional argument is the query and the
//! ideal is read from `--input` plus any further positionals. A polynomial
//! starting with `-` must follow a `--` separator. Exit codes:
//! 0 on success, 1 when `member` answers NO, 2 on input errors.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::coeff::{CoeffRing, PrimeField, RingDescriptor, RingKind};
use crate::completion::{Completion, CompletionError};
use crate::poly::{OrderKind, PolyError, PolyRing, Polynomial, TermOrder};
use crate::reduction::Strategy;
use crate::text::{format_polynomial, parse_polynomial, ParseError, Variables};

#[derive(Debug, Parser)]
#[command(name = "groebner", version, about = "Gröbner bases over GF(p), Q and Z")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the interreduced Gröbner basis, one polynomial per line.
    Gb(Positionals),
    /// Print the normal form of the query against the Gröbner basis.
    Nf(Positionals),
    /// Decide ideal membership of the query.
    Member(Positionals),
}

#[derive(Debug, Args)]
pub struct Positionals {
    /// Polynomials (for nf/member the first one is the query). Put `--`
    /// before a polynomial that starts with `-`.
    pub polys: Vec<String>,
}

#[derive(Debug, Args)]
pub struct Options {
    /// Coefficient ring: gf(p), qq or zz.
    #[arg(long, global = true, default_value = "qq")]
    pub ring: String,
    /// Term order: lex or deglex.
    #[arg(long, global = true, default_value = "lex")]
    pub order: String,
    /// Comma-separated variables, largest first.
    #[arg(long, global = true, default_value = "")]
    pub vars: String,
    /// File with one polynomial per line; blank lines and `#` comments are
    /// ignored.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Use a randomized reduction strategy with this seed.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Print completion statistics to standard error.
    #[arg(long, global = true)]
    pub trace: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandKind {
    Gb,
    Nf,
    Member,
}

/// Polynomial text with a label saying where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Source {
    pub origin: String,
    pub text: String,
}

/// A fully resolved invocation.
#[derive(Debug, Clone)]
pub struct SessionConfig {
    pub ring: RingDescriptor,
    pub variables: Variables,
    pub order: OrderKind,
    pub command: CommandKind,
    pub generators: Vec<Source>,
    pub query: Option<Source>,
    pub seed: Option<u64>,
    pub trace: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Ring(#[from] crate::coeff::RingError),
    #[error("{0}")]
    Poly(#[from] PolyError),
    #[error("--vars: {0}")]
    Variables(ParseError),
    #[error("{origin}: {error}")]
    Parse { origin: String, error: ParseError },
    #[error("cannot read {path}: {error}")]
    Io { path: String, error: std::io::Error },
    #[error("{0} needs a query polynomial")]
    MissingQuery(&'static str),
    #[error("{0}")]
    Completion(#[from] CompletionError),
}

/// Text written by a run, and its exit code.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Report {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Polynomial lines of an input file.
pub fn read_lines(content: &str, origin: &str) -> Vec<Source> {
    content
        .lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let text = line.split('#').next().unwrap_or("").trim();
            (!text.is_empty()).then(|| Source {
                origin: format!("{origin}:{}", i + 1),
                text: text.to_string(),
            })
        })
        .collect()
}

impl SessionConfig {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let o = cli.options;
        let ring: RingDescriptor = o.ring.parse()?;
        let order: OrderKind = o.order.parse()?;
        let variables = Variables::parse(&o.vars).map_err(CliError::Variables)?;
        let (command, polys) = match cli.command {
            Command::Gb(p) => (CommandKind::Gb, p.polys),
            Command::Nf(p) => (CommandKind::Nf, p.polys),
            Command::Member(p) => (CommandKind::Member, p.polys),
        };
        let mut args = polys
            .into_iter()
            .enumerate()
            .map(|(i, text)| Source {
                origin: format!("argument {}", i + 1),
                text,
            })
            .collect::<Vec<_>>()
            .into_iter();
        let query = match command {
            CommandKind::Gb => None,
            CommandKind::Nf => Some(args.next().ok_or(CliError::MissingQuery("nf"))?),
            CommandKind::Member => Some(args.next().ok_or(CliError::MissingQuery("member"))?),
        };
        let mut generators = Vec::new();
        if let Some(path) = &o.input {
            let content = std::fs::read_to_string(path).map_err(|error| CliError::Io {
                path: path.display().to_string(),
                error,
            })?;
            generators.extend(read_lines(&content, &path.display().to_string()));
        }
        generators.extend(args);
        Ok(Self {
            ring,
            variables,
            order,
            command,
            generators,
            query,
            seed: o.seed,
            trace: o.trace,
        })
    }
}

/// Runs a configured session.
pub fn run(config: &SessionConfig) -> Report {
    let order = TermOrder::new(config.order, config.variables.len());
    let result = match config.ring.kind {
        RingKind::PrimeField(p) => PrimeField::new(p)
            .map_err(CliError::from)
            .and_then(|r| execute(r, order, config)),
        RingKind::Rationals => execute(crate::Rationals::new(), order, config),
        RingKind::Integers => execute(crate::Integers::new(), order, config),
    };
    result.unwrap_or_else(|e| Report {
        exit_code: 2,
        stdout: String::new(),
        stderr: format!("error: {e}\n"),
    })
}

/// Parses `args` (including the program name) and runs them.
pub fn run_args<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Report {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Report {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match SessionConfig::from_cli(cli) {
        Ok(config) => run(&config),
        Err(e) => Report {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn parse_source<R: CoeffRing>(
    pr: &PolyRing<R>,
    vars: &Variables,
    src: &Source,
) -> Result<Polynomial<R::Elem>, CliError> {
    parse_polynomial(pr, vars, &src.text).map_err(|error| CliError::Parse {
        origin: src.origin.clone(),
        error,
    })
}

fn execute<R: CoeffRing>(
    ring: R,
    order: TermOrder,
    config: &SessionConfig,
) -> Result<Report, CliError> {
    let pr = PolyRing::new(ring, order)?;
    let vars = &config.variables;
    let generators = config
        .generators
        .iter()
        .map(|s| parse_source(&pr, vars, s))
        .collect::<Result<Vec<_>, _>>()?;
    let query = config
        .query
        .as_ref()
        .map(|s| parse_source(&pr, vars, s))
        .transpose()?;

    let completion = Completion::new(&pr);
    let trace = completion.complete(&generators)?;
    let basis = completion.interreduce(&trace.basis)?;

    let mut report = Report::default();
    let fmt = |p: &Polynomial<R::Elem>| format_polynomial(&pr, vars, p);
    if config.trace {
        let _ = writeln!(report.stderr, "iterations: {}", trace.iterations);
        let _ = writeln!(report.stderr, "pairs processed: {}", trace.pairs_processed);
        let _ = writeln!(report.stderr, "polynomials added: {}", trace.added.len());
        for p in &trace.added {
            let _ = writeln!(report.stderr, "  {}", fmt(p));
        }
        let _ = writeln!(report.stderr, "completed basis size: {}", trace.basis.len());
        let _ = writeln!(report.stderr, "interreduced basis size: {}", basis.len());
    }

    let normal_form = |q: &Polynomial<R::Elem>| match config.seed {
        None => pr.normal_form(q, &basis),
        Some(seed) => {
            pr.normal_form_with(q, &basis, &mut Strategy::randomized(seed), None)
                .expect("no step limit")
                .remainder
        }
    };

    match config.command {
        CommandKind::Gb => {
            for p in &basis {
                let _ = writeln!(report.stdout, "{}", fmt(p));
            }
        }
        CommandKind::Nf => {
            let q = query.expect("nf has a query");
            let _ = writeln!(report.stdout, "{}", fmt(&normal_form(&q)));
        }
        CommandKind::Member => {
            let q = query.expect("member has a query");
            let nf = normal_form(&q);
            if nf.is_zero() {
                report.stdout.push_str("YES\n");
                let membership = completion.ideal_membership(&q, &generators)?;
                if let crate::completion::Membership::Member { certificate } = membership {
                    for (c, g) in certificate.iter().zip(&generators) {
                        if !c.is_zero() {
                            let _ = writeln!(report.stdout, "({})*({})", fmt(c), fmt(g));
                        }
                    }
                }
            } else {
                report.exit_code = 1;
                report.stdout.push_str("NO\n");
                let _ = writeln!(report.stdout, "{}", fmt(&nf));
            }
        }
    }
    Ok(report)
}
