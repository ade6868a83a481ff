//! Command-line front end: parses a session config and an expression, runs
//! one computation, and renders text or CSV.

pub mod config;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use skewcalc_core::oracles::{slice_quotient_norm, MonomialAtoms, SearchBudget, SliceCap};
use skewcalc_core::ore::{localizability_probe, LaurentOrePoly};
use skewcalc_core::quotient::{
    canonical_representative, quotient_norm_with, reduce_to_ore, vanishing_test, QuotientClass, QuotientFormula,
    WordFamily,
};
use skewcalc_core::text::{parse_base, parse_element, parse_twisted, Parsed};
use skewcalc_core::{
    BaseAlgebra, Derivation, EntireAlgebra, Error, Exactness, FreeAlgebra, IntervalAlgebra, OreAlgebra, TwistedAlgebra,
    TwistedSeries,
};

pub use config::{AutKind, BaseKind, Format, SessionConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::Parse { .. } | Error::UnknownGenerator(_) | Error::InvalidLetter(_))
            | CliError::Config { .. }
            | CliError::Usage(_) => EXIT_PARSE,
            CliError::Core(
                Error::UnsupportedAutomorphism(_)
                | Error::Unsupported(_)
                | Error::NonRealCoefficient(_)
                | Error::InvalidDerivation(..)
                | Error::CannotCertify(_),
            ) => EXIT_UNSUPPORTED,
            _ => EXIT_FAILURE,
        }
    }
}

fn unsupported(message: impl Into<String>) -> CliError {
    CliError::Core(Error::Unsupported(message.into()))
}

#[derive(Debug, Parser)]
#[command(
    name = "skewcalc",
    version,
    about = "Twisted tensor, Ore and Laurent algebra calculator"
)]
pub struct Cli {
    /// Session config file (key = value).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Base seminorm index: radius, or half-width for the interval base.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub lambda: f64,
    /// Weight of a generator letter.
    #[arg(long, global = true, default_value_t = 1.0)]
    pub rho: f64,
    #[arg(long, global = true, value_delimiter = ',')]
    pub lambda_grid: Option<Vec<f64>>,
    #[arg(long, global = true, value_delimiter = ',')]
    pub rho_grid: Option<Vec<f64>>,
    #[arg(long, global = true)]
    pub depth: Option<usize>,
    #[arg(long, global = true)]
    pub format: Option<Format>,
    /// Seed for the sampling oracles.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// 1^k 2^k
    W,
    /// 2^k 1^k
    WPrime,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply expressions left to right.
    Mul {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Twisted norm (or Laurent norm for expressions in t).
    Norm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Quotient seminorm over the scaling base.
    Qnorm {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        /// Evaluate the closed-form sum instead of the representative norm.
        #[arg(long)]
        closed_form: bool,
        /// Also report an ideal-slice upper bound.
        #[arg(long)]
        slice: bool,
    },
    /// Canonical representative of the class at radius --rho.
    Reduce {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// The functionals phi_{m,n}; all nonzero ones unless --m and --n are given.
    Phi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Exact membership in the ideal generated by x1 x2 - 1 and x2 x1 - 1.
    IdealTest {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Image in the Laurent Ore extension (x1 -> t, x2 -> t^-1).
    ToOre {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Growth of the automorphism on the canonical seminorms.
    Localizability,
    /// Decay of |r|^(w_k) rho^(2k) along w_k.
    Vanishing {
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long, value_enum, default_value_t = Family::W)]
        family: Family,
    },
    /// Norm over the lambda x rho grid as CSV.
    Table {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

const DEFAULT_LAMBDA_GRID: [f64; 5] = [1.0, 2.0, 3.0, 4.0, 5.0];
const DEFAULT_RHO_GRID: [f64; 4] = [0.5, 1.0, 2.0, 4.0];
const DEFAULT_DEPTH: usize = 12;

struct Ctx {
    cli: Cli,
    format: Format,
    caps: skewcalc_core::Caps,
    derivation: Derivation,
}

impl Ctx {
    fn lambdas(&self) -> Vec<f64> {
        self.cli
            .lambda_grid
            .clone()
            .unwrap_or_else(|| DEFAULT_LAMBDA_GRID.to_vec())
    }

    fn rhos(&self, default: &[f64]) -> Vec<f64> {
        self.cli.rho_grid.clone().unwrap_or_else(|| default.to_vec())
    }

    fn depth(&self) -> usize {
        self.cli.depth.unwrap_or(DEFAULT_DEPTH)
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    match execute(cli) {
        Ok(stdout) => Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn load_config(cli: &Cli) -> Result<SessionConfig, CliError> {
    match &cli.config {
        None => Ok(SessionConfig::default()),
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?
            .parse(),
    }
}

fn execute(cli: Cli) -> Result<String, CliError> {
    let cfg = load_config(&cli)?;
    let ctx = Ctx {
        format: cli.format.unwrap_or(cfg.format),
        caps: cfg.caps,
        derivation: cfg.derivation,
        cli,
    };
    let q = |i: usize| {
        cfg.q.get(i).cloned().ok_or_else(|| CliError::Config {
            line: 0,
            message: "q is required".into(),
        })
    };
    if cfg.derivation != Derivation::Zero && !matches!(cfg.base, BaseKind::Entire | BaseKind::Interval) {
        return Err(unsupported("a derivation needs the entire or interval base"));
    }
    match (&cfg.base, cfg.automorphism) {
        (BaseKind::Entire, aut) => {
            let base = match aut {
                AutKind::Scale => EntireAlgebra::scale(q(0)?)?,
                AutKind::Shift => EntireAlgebra::shift(),
                AutKind::Identity => EntireAlgebra::identity(),
                AutKind::Diagonal => return Err(unsupported("diagonal automorphisms need base = free(n)")),
            };
            run_entire(base, &ctx)
        }
        (BaseKind::Interval, aut) => {
            let base = match aut {
                AutKind::Shift => IntervalAlgebra::shift(),
                AutKind::Identity => IntervalAlgebra::identity(),
                _ => return Err(unsupported("the interval base supports shift and identity only")),
            };
            run_generic(base, &ctx)
        }
        (BaseKind::Free(n), aut) => {
            let base = match aut {
                AutKind::Diagonal if cfg.q.len() == *n => FreeAlgebra::diagonal(cfg.q.clone())?,
                AutKind::Diagonal => {
                    return Err(CliError::Config {
                        line: 0,
                        message: format!("diagonal needs {n} values of q, got {}", cfg.q.len()),
                    })
                }
                AutKind::Identity => FreeAlgebra::identity(*n),
                _ => return Err(unsupported("the free base supports diagonal and identity only")),
            };
            run_generic(base, &ctx)
        }
    }
}

fn algebras<A: BaseAlgebra>(base: &A, ctx: &Ctx) -> Result<(TwistedAlgebra<A>, OreAlgebra<A>), CliError> {
    Ok((
        TwistedAlgebra::new(base.clone(), ctx.caps),
        OreAlgebra::new(base.clone(), ctx.derivation)?,
    ))
}

fn expect_twisted<E>(p: Parsed<E>) -> Result<TwistedSeries<E>, CliError> {
    match p {
        Parsed::Twisted(f) => Ok(f),
        Parsed::Ore(_) => Err(unsupported("this command takes an expression in x1, x2")),
    }
}

fn norm_line(ctx: &Ctx, value: f64, exactness: Exactness) -> String {
    match ctx.format {
        Format::Text => format!("{value} ({exactness})\n"),
        Format::Csv => format!(
            "lambda,rho,value,exactness\n{},{},{value},{exactness}\n",
            ctx.cli.lambda, ctx.cli.rho
        ),
    }
}

/// Commands specific to entire functions, then the generic ones.
fn run_entire(base: EntireAlgebra, ctx: &Ctx) -> Result<String, CliError> {
    let (twisted, ore) = algebras(&base, ctx)?;
    let (lambda, rho) = (ctx.cli.lambda, ctx.cli.rho);
    let parse = |src: &str| {
        parse_element(&twisted, &ore, src)
            .map_err(CliError::from)
            .and_then(expect_twisted)
    };
    match &ctx.cli.command {
        Command::Qnorm {
            expr,
            closed_form,
            slice,
        } => {
            let f = parse(expr)?;
            let formula = if *closed_form {
                QuotientFormula::ClosedForm
            } else {
                QuotientFormula::Representative
            };
            let value = quotient_norm_with(&twisted, &f, lambda, rho, formula)?;
            let mut out = format!("{value}\n");
            if *slice {
                let budget = SearchBudget {
                    seed: ctx.cli.seed,
                    ..SearchBudget::default()
                };
                let bound = slice_quotient_norm(&twisted, &f, lambda, rho, SliceCap::default(), &budget)?;
                writeln!(out, "slice upper bound: {bound}").expect("string write");
            }
            Ok(out)
        }
        Command::Reduce { expr } => {
            let rep = canonical_representative(&twisted, &parse(expr)?, rho)?;
            let mut out = format!("{}\n", rep.series);
            for ((m, n), c) in &rep.dropped {
                writeln!(
                    out,
                    "dropped (m={m}, n={n}, coefficient {}): infimum 0, approached by padding",
                    skewcalc_core::scalar::fmt_scalar(c)
                )
                .expect("string write");
            }
            Ok(out)
        }
        Command::Phi { expr, m, n } => {
            let f = parse(expr)?;
            match (m, n) {
                (Some(m), Some(n)) => Ok(format!(
                    "{}\n",
                    skewcalc_core::scalar::fmt_scalar(&skewcalc_core::quotient::phi(&f, *m, *n))
                )),
                (None, None) => Ok(format!("{}\n", QuotientClass::of(&f))),
                _ => Err(CliError::Usage("give both --m and --n, or neither".into())),
            }
        }
        Command::IdealTest { expr } => Ok(format!("{}\n", skewcalc_core::quotient::ideal_member(&parse(expr)?))),
        _ => run_generic(base, ctx),
    }
}

fn run_generic<A: MonomialAtoms>(base: A, ctx: &Ctx) -> Result<String, CliError> {
    let (twisted, ore) = algebras(&base, ctx)?;
    let (lambda, rho) = (ctx.cli.lambda, ctx.cli.rho);
    let parse = |src: &str| parse_element(&twisted, &ore, src).map_err(CliError::from);
    match &ctx.cli.command {
        Command::Mul { exprs } => {
            let mut parsed = exprs.iter().map(|s| parse(s));
            let first = parsed.next().expect("clap requires one expression")?;
            let product = parsed.try_fold(first, |acc, next| -> Result<_, CliError> {
                Ok(match (acc, next?) {
                    (Parsed::Twisted(f), Parsed::Twisted(g)) => Parsed::Twisted(twisted.mul(&f, &g)),
                    (Parsed::Ore(f), Parsed::Ore(g)) => Parsed::Ore(ore.mul(&f, &g)?),
                    (Parsed::Ore(f), Parsed::Twisted(g)) | (Parsed::Twisted(g), Parsed::Ore(f)) if is_constant(&g) => {
                        let c = g
                            .coeff(&skewcalc_core::Word::empty())
                            .cloned()
                            .unwrap_or_else(|| base.zero());
                        Parsed::Ore(ore.mul(&f, &ore.constant(c))?)
                    }
                    _ => {
                        return Err(CliError::Core(Error::InvalidArgument(
                            "cannot multiply an Ore element by a twisted series".into(),
                        )))
                    }
                })
            })?;
            match product {
                Parsed::Twisted(f) if f.truncated() => Err(CliError::Core(Error::CapOverflow(format!(
                    "product exceeds word length {} or degree {}",
                    ctx.caps.max_word_len, ctx.caps.max_degree
                )))),
                Parsed::Twisted(f) => Ok(format!("{f}\n")),
                Parsed::Ore(p) => Ok(format!("{p}\n")),
            }
        }
        Command::Norm { expr } => match parse(expr)? {
            Parsed::Twisted(f) => {
                let v = twisted.twisted_norm(&f, lambda, rho)?;
                Ok(norm_line(ctx, v.value, v.exactness))
            }
            Parsed::Ore(p) => Ok(norm_line(
                ctx,
                ore.laurent_series_norm(&p, lambda, rho)?,
                Exactness::Exact,
            )),
        },
        Command::ToOre { expr } => {
            let p: LaurentOrePoly<A::Elem> = match parse(expr)? {
                Parsed::Twisted(f) => reduce_to_ore(&twisted, &f),
                Parsed::Ore(p) => p,
            };
            Ok(format!("{p}\n"))
        }
        Command::Localizability => {
            let rows = localizability_probe(&base, &ctx.lambdas(), ctx.depth())?;
            let mut out = String::new();
            match ctx.format {
                Format::Text => {
                    for r in rows {
                        writeln!(
                            out,
                            "lambda={} forward={} inverse={} joint={}",
                            r.lambda, r.forward, r.inverse, r.joint
                        )
                        .expect("string write");
                    }
                }
                Format::Csv => {
                    out.push_str("lambda,forward,inverse,joint\n");
                    for r in rows {
                        writeln!(out, "{},{},{},{}", r.lambda, r.forward, r.inverse, r.joint).expect("string write");
                    }
                }
            }
            Ok(out)
        }
        Command::Vanishing { r, family } => {
            let r = parse_base(&base, r)?;
            let family = match family {
                Family::W => WordFamily::W,
                Family::WPrime => WordFamily::WPrime,
            };
            let report = vanishing_test(&base, &r, &ctx.lambdas(), &ctx.rhos(&[1.0]), ctx.depth(), family)?;
            Ok(match ctx.format {
                Format::Csv => report.to_csv(),
                Format::Text => {
                    let mut out = format!("{}\n", report.verdict);
                    for p in &report.points {
                        let from = p.zero_from.map_or("-".to_string(), |k| k.to_string());
                        writeln!(out, "lambda={} rho={} {} zero_from={from}", p.lambda, p.rho, p.verdict)
                            .expect("string write");
                    }
                    out
                }
            })
        }
        Command::Table { expr } => {
            let parsed = parse(expr)?;
            let mut rows = Vec::new();
            for lambda in ctx.lambdas() {
                for rho in ctx.rhos(&DEFAULT_RHO_GRID) {
                    let (value, exactness) = match &parsed {
                        Parsed::Twisted(f) => {
                            let v = twisted.twisted_norm(f, lambda, rho)?;
                            (v.value, v.exactness)
                        }
                        Parsed::Ore(p) => (ore.laurent_series_norm(p, lambda, rho)?, Exactness::Exact),
                    };
                    rows.push((lambda, rho, value, exactness));
                }
            }
            rows.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
            let mut out = String::from("lambda,rho,value,exactness\n");
            for (lambda, rho, value, exactness) in rows {
                writeln!(out, "{lambda},{rho},{value},{exactness}").expect("string write");
            }
            Ok(out)
        }
        Command::Qnorm { .. } | Command::Reduce { .. } | Command::Phi { .. } | Command::IdealTest { .. } => Err(
            unsupported(format!("{} works over entire functions only", base.describe())),
        ),
    }
}

fn is_constant<E>(f: &TwistedSeries<E>) -> bool {
    f.terms().all(|(w, _)| w.is_empty())
}

/// Entry point for tests and the binary: the parsed twisted element of
/// `src` under the default session.
pub fn parse_default(src: &str) -> Result<TwistedSeries<skewcalc_core::EntirePoly>, CliError> {
    let cfg = SessionConfig::default();
    let base = EntireAlgebra::scale(cfg.q[0].clone())?;
    Ok(parse_twisted(&TwistedAlgebra::new(base, cfg.caps), src)?)
}
