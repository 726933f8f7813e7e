//! Command-line front end. [`run`] parses arguments, evaluates the
//! expressions and writes text or JSON; the `plane-auto` binary is a thin
//! wrapper around it.
//!
//! `*` in expressions is the diagrammatic product: `g * h` applies `g`
//! first, so `(x, y+1) * (x+y^2, y)` is `(x + (y+1)^2, y+1)`.

mod parse;

use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::amalgam::{Engine, Factor};
use crate::error::{Error, Result};
use crate::exactnum::GaussianRational;
use crate::paperlab::{check_names, run_all, run_check, Config, Report};
use crate::planeauto::PolyMap;

pub use parse::{parse, parse_map, parse_poly, parse_with_cap, Expr, Expression};

/// Exit status for success or a passing check.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification check fails.
pub const EXIT_CHECK_FAILED: i32 = 1;
/// Exit status for malformed input or a failed operation.
pub const EXIT_INPUT_ERROR: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "plane-auto",
    version,
    about = "Exact computation with unimodular polynomial automorphisms of the plane",
    after_help = "Expressions: maps (P, Q) joined by '*' (diagrammatic: g * h applies g first), \
                  powers g^n, inv(g), conj(g; s) = s*g*s^-1, comm(g; h) = g*h*g^-1*h^-1. \
                  An argument '-' is read from stdin."
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Largest total degree allowed in intermediate results.
    #[arg(long, global = true)]
    degree_cap: Option<u32>,
    /// Seed for the verification corpora.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Overrides the per-check sample count.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Rejects input maps whose Jacobian is not identically 1.
    #[arg(long, global = true)]
    require_unimodular: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Product of the expressions, left to right.
    Compose {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Inverse.
    Inv { expr: String },
    /// n-th power; negative n allowed.
    Pow {
        expr: String,
        #[arg(allow_negative_numbers = true)]
        n: i64,
    },
    /// Value at a point of Q(i)².
    Eval {
        expr: String,
        #[arg(allow_hyphen_values = true)]
        x: String,
        #[arg(allow_hyphen_values = true)]
        y: String,
    },
    /// Jacobian determinant.
    Jacobian { expr: String },
    /// Reduced factorization into affine and triangular factors.
    Factor { expr: String },
    /// Normal form over the coset representatives.
    Nf { expr: String },
    /// Algebraic length.
    Len { expr: String },
    /// Elementary or Henon type.
    Classify { expr: String },
    /// Conjugate to a product of generalized Henon maps.
    Henon { expr: String },
    /// Runs a named check, or all of them.
    Verify { name: String },
}

struct Ctx<'a> {
    engine: Engine,
    format: Format,
    require_unimodular: bool,
    stdin: &'a mut dyn Read,
    stdin_used: bool,
}

impl Ctx<'_> {
    fn source(&mut self, arg: &str) -> Result<String> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.stdin_used {
            return Err(Error::Semantic("stdin can only be read once".into()));
        }
        self.stdin_used = true;
        let mut s = String::new();
        self.stdin
            .read_to_string(&mut s)
            .map_err(|e| Error::Semantic(format!("cannot read stdin: {e}")))?;
        Ok(s.trim().to_string())
    }

    fn map(&mut self, arg: &str) -> Result<PolyMap> {
        let src = self.source(arg)?;
        let g = parse_with_cap(&src, self.engine.cap())?.eval(&self.engine)?;
        if self.require_unimodular && !g.is_unimodular() {
            return Err(Error::NotUnimodular(g.jacobian().to_string()));
        }
        Ok(g)
    }

    fn scalar(&mut self, arg: &str) -> Result<GaussianRational> {
        let src = self.source(arg)?;
        Ok(src.parse()?)
    }
}

/// Output of a command before formatting.
struct Output {
    text: String,
    json: Value,
    status: i32,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output {
            text,
            json,
            status: EXIT_OK,
        }
    }
}

fn map_json(g: &PolyMap) -> Value {
    json!({
        "map": g.to_string(),
        "p": g.p().to_string(),
        "q": g.q().to_string(),
        "degree": g.degree(),
    })
}

fn map_output(g: PolyMap) -> Output {
    Output::ok(g.to_string(), map_json(&g))
}

fn report_text(r: &Report) -> String {
    let status = if r.pass { "PASS" } else { "FAIL" };
    format!("{status} {}", r.check)
}

fn execute(cmd: &Command, ctx: &mut Ctx<'_>, cfg: Config) -> Result<Output> {
    let e = ctx.engine;
    Ok(match cmd {
        Command::Compose { exprs } => {
            let mut acc = PolyMap::identity();
            for s in exprs {
                let g = ctx.map(s)?;
                acc = e.mul(&acc, &g)?;
            }
            map_output(acc)
        }
        Command::Inv { expr } => map_output(e.invert(&ctx.map(expr)?)?),
        Command::Pow { expr, n } => map_output(e.power(&ctx.map(expr)?, *n)?),
        Command::Eval { expr, x, y } => {
            let g = ctx.map(expr)?;
            let pt = (ctx.scalar(x)?, ctx.scalar(y)?);
            let (a, b) = g.evaluate(&pt);
            Output::ok(
                format!("({a}, {b})"),
                json!({ "point": [pt.0.to_string(), pt.1.to_string()], "value": [a.to_string(), b.to_string()] }),
            )
        }
        Command::Jacobian { expr } => {
            let g = ctx.map(expr)?;
            let j = g.jacobian();
            Output::ok(
                j.to_string(),
                json!({ "jacobian": j.to_string(), "unimodular": g.is_unimodular() }),
            )
        }
        Command::Factor { expr } => {
            let fs = e.factorize(&ctx.map(expr)?)?;
            let text = fs
                .iter()
                .map(Factor::to_string)
                .collect::<Vec<_>>()
                .join("\n");
            let items: Vec<Value> = fs
                .iter()
                .map(|f| {
                    let kind = match f {
                        Factor::Affine(_) => "A",
                        Factor::Jonquieres(_) => "B",
                    };
                    json!({ "kind": kind, "map": f.to_map().to_string() })
                })
                .collect();
            Output::ok(text, json!({ "factors": items }))
        }
        Command::Nf { expr } => {
            let w = e.normal_form(&ctx.map(expr)?)?;
            Output::ok(w.to_string(), w.to_json())
        }
        Command::Len { expr } => {
            let n = e.length(&ctx.map(expr)?)?;
            Output::ok(n.to_string(), json!({ "length": n }))
        }
        Command::Classify { expr } => {
            let c = e.classify(&ctx.map(expr)?)?;
            Output::ok(
                c.verdict.to_string(),
                json!({
                    "verdict": c.verdict.to_string(),
                    "witness": c.witness.to_json(),
                    "conjugator": c.conjugator.to_string(),
                }),
            )
        }
        Command::Henon { expr } => {
            let h = e.henon_form(&ctx.map(expr)?)?;
            let mut text = format!("sigma {}", h.sigma);
            for f in &h.factors {
                text.push_str(&format!("\n{f}"));
            }
            let factors: Vec<Value> = h
                .factors
                .iter()
                .map(|f| {
                    json!({
                        "delta": f.delta.to_string(),
                        "q": f.q.to_string(),
                        "map": f.to_map().to_string(),
                    })
                })
                .collect();
            Output::ok(
                text,
                json!({ "sigma": h.sigma.to_string(), "factors": factors }),
            )
        }
        Command::Verify { name } => {
            let reports = if name == "all" {
                run_all(&cfg)
            } else {
                vec![run_check(name, &cfg).ok_or_else(|| {
                    Error::Semantic(format!(
                        "unknown check '{name}'; expected all or one of {}",
                        check_names().join(", ")
                    ))
                })?]
            };
            let pass = reports.iter().all(|r| r.pass);
            let text = reports
                .iter()
                .map(report_text)
                .collect::<Vec<_>>()
                .join("\n");
            let json = if name == "all" {
                json!({
                    "pass": pass,
                    "seed": cfg.seed,
                    "reports": reports.iter().map(Report::to_json).collect::<Vec<_>>(),
                })
            } else {
                reports[0].to_json()
            };
            Output {
                text,
                json,
                status: if pass { EXIT_OK } else { EXIT_CHECK_FAILED },
            }
        }
    })
}

fn error_json(err: &Error) -> Value {
    json!({ "error": { "code": err.code(), "name": err.name(), "message": err.to_string() } })
}

/// Runs one command line (`args[0]` is the program name) and returns the
/// exit status. Errors never produce partial output on `out`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INPUT_ERROR
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let engine = cli
        .degree_cap
        .map_or_else(Engine::default, Engine::with_degree_cap);
    let cfg = Config {
        seed: cli.seed,
        samples: cli.samples,
        engine,
    };
    let mut ctx = Ctx {
        engine,
        format: cli.format,
        require_unimodular: cli.require_unimodular,
        stdin,
        stdin_used: false,
    };
    match execute(&cli.command, &mut ctx, cfg) {
        Ok(o) => {
            let _ = match ctx.format {
                Format::Text => writeln!(out, "{}", o.text),
                Format::Json => writeln!(out, "{}", o.json),
            };
            o.status
        }
        Err(e) => {
            let _ = match ctx.format {
                Format::Text => writeln!(err, "error[{} {}]: {e}", e.code(), e.name()),
                Format::Json => writeln!(err, "{}", error_json(&e)),
            };
            EXIT_INPUT_ERROR
        }
    }
}
