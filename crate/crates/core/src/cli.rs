//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 on a violation or
//! counterexample, 2 on usage or input errors, 3 when nothing failed but
//! something stayed undecided.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::configcheck::{
    self, check_d1, check_d2, check_pappus, CheckOutcome, DesarguesConfig, Mode, PappusConfig, Status, Variant,
    VerificationReport,
};
use crate::coordinatize::{coords, Frame};
use crate::error::Error;
use crate::field::{Backend, Budget};
use crate::plane::{self, Line, Point};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

/// Dyadic budget used when neither `--budget` nor the environment sets one.
pub const DEFAULT_BUDGET: u32 = 64;
pub const BUDGET_ENV: &str = "PLANE_DEFAULT_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "desargues", version, about = "Constructive affine planes over Heyting fields")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Axioms,
    Configurations,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    D1,
    D2,
    Pappus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum LineOp {
    Join,
    Intersect,
    Parallel,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the axiom and configuration suites over a field.
    Verify {
        #[arg(long)]
        field: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        seed: u64,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, value_enum, default_value_t = Suite::Axioms)]
        suite: Suite,
    },
    /// Coordinates of points relative to a frame.
    Coordinatize {
        #[arg(long)]
        field: String,
        #[arg(long)]
        frame: PathBuf,
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        budget: Option<u32>,
    },
    /// Check one Desargues or Pappus configuration.
    Check {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        config: PathBuf,
        #[arg(long, default_value = "rational")]
        field: String,
        #[arg(long)]
        budget: Option<u32>,
    },
    /// Run an undecidability demo.
    Demo {
        #[arg(long)]
        example: String,
        #[arg(long)]
        budget: Option<u32>,
    },
    /// Join two points, intersect two lines, or draw a parallel.
    Lines {
        #[arg(long)]
        field: String,
        #[arg(long, value_enum)]
        op: LineOp,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        budget: Option<u32>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(code: i32, stdout: String) -> Self {
        Output {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Output::ok(EXIT_OK, text)
                }
                _ => Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match execute(&cfg) {
        Ok(out) => out,
        Err(e) => Output::usage(e),
    }
}

fn default_budget() -> Result<u32, String> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{BUDGET_ENV} must be a nonnegative integer, got {v:?}")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

/// A dyadic spec without a budget picks up the default.
fn backend(spec: &str, budget: Option<u32>) -> Result<Backend, String> {
    let spec = if spec == "dyadic" {
        format!("dyadic:{}", budget.map_or_else(default_budget, Ok)?)
    } else {
        spec.to_string()
    };
    spec.parse().map_err(|e| format!("{e}"))
}

fn budget_for(b: &Backend, budget: Option<u32>) -> Option<Budget> {
    match (b, budget) {
        (_, Some(n)) => Some(Budget::of(n)),
        (Backend::Dyadic { default_budget }, None) => Some(Budget::of(*default_budget)),
        _ => None,
    }
}

fn read_json(path: &Path) -> Result<Value, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn exit_for(status: Status) -> i32 {
    match status {
        Status::Pass => EXIT_OK,
        Status::Fail => EXIT_FAIL,
        Status::Undecided => EXIT_UNDECIDED,
    }
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("JSON values serialize");
            s.push('\n');
            s
        }
    }
}

fn execute(cfg: &CliConfig) -> Result<Output, String> {
    match &cfg.command {
        Command::Verify {
            field,
            mode,
            seed,
            n,
            suite,
        } => {
            let b = backend(field, None)?;
            let mode = match mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Random => Mode::Random {
                    seed: *seed,
                    n: *n as usize,
                },
            };
            let mut reports: Vec<VerificationReport> = Vec::new();
            if matches!(suite, Suite::Axioms | Suite::All) {
                reports.push(configcheck::verify_axioms(&b, mode).map_err(|e| e.to_string())?);
            }
            if matches!(suite, Suite::Configurations | Suite::All) {
                reports.push(configcheck::verify_configurations(&b, mode).map_err(|e| e.to_string())?);
            }
            let status = reports.iter().map(VerificationReport::status).max().unwrap_or(Status::Pass);
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!("# suite {} on {} ({})\n", r.suite, r.backend, r.mode));
                text.push_str(&r.to_text());
            }
            text.push_str(&format!("RESULT {status}\n"));
            let value = json!({ "status": status, "reports": reports });
            Ok(Output::ok(exit_for(status), render(cfg.format, text, value)))
        }
        Command::Coordinatize {
            field,
            frame,
            points,
            budget,
        } => {
            let b = backend(field, *budget)?;
            let budget = budget_for(&b, *budget);
            let frame = Frame::from_json(&b, &read_json(frame)?, budget).map_err(|e| e.to_string())?;
            let pts = read_json(points)?;
            let pts = pts.as_array().ok_or("points file must hold a JSON array")?;
            let mut text = String::new();
            let mut rows = Vec::new();
            let mut status = Status::Pass;
            for v in pts {
                let p = Point::from_json(&b, v).map_err(|e| e.to_string())?;
                match coords(&frame, &p, budget) {
                    Ok((x, y)) => {
                        text.push_str(&format!("{p} -> ({x}, {y})\n"));
                        rows.push(json!({ "point": p.to_json(), "coords": [x.to_json(), y.to_json()] }));
                    }
                    Err(Error::Undecided { budget }) => {
                        status = Status::Undecided;
                        text.push_str(&format!("{p} -> undecided at budget {budget}\n"));
                        rows.push(json!({ "point": p.to_json(), "undecided": budget }));
                    }
                    Err(e) => return Err(e.to_string()),
                }
            }
            let value = json!({ "frame": frame.to_json(), "points": rows, "status": status });
            Ok(Output::ok(exit_for(status), render(cfg.format, text, value)))
        }
        Command::Check {
            kind,
            config,
            field,
            budget,
        } => {
            let b = backend(field, *budget)?;
            let budget = budget_for(&b, *budget);
            let v = read_json(config)?;
            let (id, outcome) = match kind {
                Kind::D1 | Kind::D2 => {
                    let variant = if *kind == Kind::D1 { Variant::D1 } else { Variant::D2 };
                    let c = DesarguesConfig::from_json(variant, &b, &v, budget).map_err(|e| e.to_string())?;
                    let r = if variant == Variant::D1 {
                        check_d1(&c, budget)
                    } else {
                        check_d2(&c, budget)
                    };
                    (if variant == Variant::D1 { "d1" } else { "d2" }, r)
                }
                Kind::Pappus => {
                    let c = PappusConfig::from_json(&b, &v, budget).map_err(|e| e.to_string())?;
                    ("pappus", check_pappus(&c, budget))
                }
            };
            let outcome = outcome.map_err(|e| e.to_string())?;
            // A configuration whose hypotheses fail does not contradict the postulate.
            let status = match outcome {
                CheckOutcome::Holds | CheckOutcome::HypothesisFails(_) => Status::Pass,
                CheckOutcome::Violated(_) => Status::Fail,
                CheckOutcome::Undecided(_) => Status::Undecided,
            };
            let text = format!("CHECK {id} {status} {outcome}\n");
            let mut value = outcome.to_json();
            value["check"] = json!(id);
            value["status"] = json!(status);
            Ok(Output::ok(exit_for(status), render(cfg.format, text, value)))
        }
        Command::Demo { example, budget } => {
            let budget = budget.map_or_else(default_budget, Ok)?;
            let r = configcheck::brouwerian_demo(example, budget).map_err(|e| e.to_string())?;
            let status = if r.any_unverified() {
                Status::Fail
            } else if r.any_undecided() {
                Status::Undecided
            } else {
                Status::Pass
            };
            let value = serde_json::to_value(&r).expect("reports serialize");
            Ok(Output::ok(exit_for(status), render(cfg.format, r.to_text(), value)))
        }
        Command::Lines {
            field,
            op,
            input,
            budget,
        } => {
            let b = backend(field, *budget)?;
            let budget = budget_for(&b, *budget);
            let v = read_json(input)?;
            let point = |k: &str| -> Result<Point, String> {
                let p = v.get(k).ok_or_else(|| format!("input is missing {k:?}"))?;
                Point::from_json(&b, p).map_err(|e| e.to_string())
            };
            let line = |k: &str| -> Result<Line, String> {
                let l = v.get(k).ok_or_else(|| format!("input is missing {k:?}"))?;
                Line::from_json(&b, l, budget).map_err(|e| e.to_string())
            };
            let result = match op {
                LineOp::Join => plane::join(&point("P")?, &point("Q")?, budget).map(|l| {
                    (format!("line {l}\n"), json!({ "line": l.to_json() }))
                }),
                LineOp::Parallel => plane::parallel_through(&point("P")?, &line("l")?).map(|l| {
                    (format!("line {l}\n"), json!({ "line": l.to_json() }))
                }),
                LineOp::Intersect => {
                    let (l, m) = (line("l")?, line("m")?);
                    plane::nonparallel(&l, &m, budget).and_then(|w| {
                        let p = plane::intersect(&l, &m, &w)?;
                        Ok((
                            format!("point {p} (det {}, {})\n", w.det, w.witness),
                            json!({ "point": p.to_json(), "det": w.det.to_json() }),
                        ))
                    })
                }
            };
            match result {
                Ok((text, value)) => Ok(Output::ok(EXIT_OK, render(cfg.format, text, value))),
                Err(Error::Undecided { budget }) => Ok(Output::ok(
                    EXIT_UNDECIDED,
                    render(
                        cfg.format,
                        format!("undecided at budget {budget}\n"),
                        json!({ "undecided": budget }),
                    ),
                )),
                Err(e) => Err(e.to_string()),
            }
        }
    }
}
