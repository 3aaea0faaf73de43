//! Undecidability demos on the real plane.
//!
//! Each example instantiates a configuration with a real number `c` and asks
//! the library for a decision that would settle an omniscience principle.
//! With `c` a stream whose intervals always contain 0 the search exhausts its
//! budget; with `c = 2^-10` it succeeds once the budget reaches 11.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{race_apart_zero, Budget, DyadicReal, FieldValue, Race};
use crate::plane::{self, Line, Point, Side};
use crate::scalars::Scalar;
use crate::symmetry::{Dilatation, Translation};

pub const EXAMPLES: &[&str] = &[
    "brouA", "brouB", "brouC", "brouD", "brouE", "brouF", "brouH", "brouI", "brouJ", "brouK", "brouL", "brouM",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "lowercase")]
pub enum DemoOutcome {
    /// The decision was reached; `verified` records that the witness re-checks.
    Decided { answer: String, witness: String, verified: bool },
    Undecided { budget: u32 },
}

#[derive(Clone, Debug, Serialize)]
pub struct Attempt {
    pub label: String,
    pub question: String,
    #[serde(flatten)]
    pub outcome: DemoOutcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct Instance {
    /// `hard-zero` or the literal value of `c`.
    pub c: String,
    pub attempts: Vec<Attempt>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DemoReport {
    pub example: String,
    pub statement: &'static str,
    pub implies: &'static str,
    pub budget: u32,
    pub instances: Vec<Instance>,
}

impl DemoReport {
    /// `CHECK <example>/<c>/<label> PASS|UNDECIDED|FAIL <detail>`; a decision
    /// whose witness fails to verify is a FAIL.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {}: {} (implies {})\n", self.example, self.statement, self.implies);
        for inst in &self.instances {
            for a in &inst.attempts {
                let (status, detail) = match &a.outcome {
                    DemoOutcome::Decided {
                        answer,
                        witness,
                        verified: true,
                    } => ("PASS", format!("{answer} [{witness}]")),
                    DemoOutcome::Decided { answer, witness, .. } => {
                        ("FAIL", format!("{answer} [{witness}] does not verify"))
                    }
                    DemoOutcome::Undecided { budget } => ("UNDECIDED", format!("budget {budget} exhausted")),
                };
                out.push_str(&format!(
                    "CHECK {}/{}/{} {status} {}: {detail}\n",
                    self.example, inst.c, a.label, a.question
                ));
            }
        }
        out
    }

    pub fn any_decided(&self) -> bool {
        self.instances
            .iter()
            .flat_map(|i| &i.attempts)
            .any(|a| matches!(a.outcome, DemoOutcome::Decided { .. }))
    }

    pub fn any_unverified(&self) -> bool {
        self.instances.iter().flat_map(|i| &i.attempts).any(|a| {
            matches!(
                a.outcome,
                DemoOutcome::Decided {
                    verified: false,
                    ..
                }
            )
        })
    }

    pub fn any_undecided(&self) -> bool {
        self.instances
            .iter()
            .flat_map(|i| &i.attempts)
            .any(|a| matches!(a.outcome, DemoOutcome::Undecided { .. }))
    }
}

impl fmt::Display for DemoReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn canonical(id: &str) -> Option<&'static str> {
    Some(match id {
        "brouA" => "brouA",
        "brouB" => "brouB",
        "brouC" | "brouD" => "brouC",
        "brouE" => "brouE",
        "brouF" => "brouF",
        "brouH" | "brouI" => "brouH",
        "brouJ" | "brouM" => "brouJ",
        "brouK" => "brouK",
        "brouL" => "brouL",
        _ => return None,
    })
}

fn describe(id: &str) -> (&'static str, &'static str) {
    match id {
        "brouA" => ("if not P = Q then P ≠ Q; if not P ∈ l then P ∉ l", "MP"),
        "brouB" => ("parallel lines are equal or disjoint", "WLPO"),
        "brouC" => ("lines that are not parallel, or share exactly one point, are nonparallel", "MP"),
        "brouE" => ("a dilatation is the identity or distinct from it", "LPO"),
        "brouF" => ("if τ^α = 1 then α = 0 or τ = 1", "LLPO"),
        "brouH" => ("weaker forms of nonparallel imply nonparallel", "MP"),
        "brouJ" => ("equality of points, incidence and parallelism are decidable", "LPO"),
        "brouK" => ("the traces of a translation lie in one pencil", "LLPO"),
        "brouL" => ("a dilatation is degenerate or injective", "LPO"),
        _ => unreachable!("canonical ids only"),
    }
}

fn unknown(id: &str) -> Error {
    Error::Malformed(format!("unknown example {id:?}; expected one of {}", EXAMPLES.join(", ")))
}

/// Runs the example with the hard stream and with `c = 2^-10`.
pub fn brouwerian_demo(id: &str, budget: u32) -> Result<DemoReport> {
    let hard = FieldValue::Dyadic(DyadicReal::hard_zero(budget));
    let small = FieldValue::Dyadic(DyadicReal::from_rational(
        BigRational::new(BigInt::from(1), BigInt::from(1024)),
        budget,
    ));
    demo_with(id, &[("hard-zero", hard), ("2^-10", small)], budget)
}

/// Runs the example for each labelled value of `c`.
pub fn demo_with(id: &str, cs: &[(&str, FieldValue)], budget: u32) -> Result<DemoReport> {
    let key = canonical(id).ok_or_else(|| unknown(id))?;
    let (statement, implies) = describe(key);
    let mut instances = Vec::new();
    for (label, c) in cs {
        let b = Budget::of(budget);
        let attempts = match key {
            "brouA" => vec![points_apart(c, b)?, point_outside(c, b)?],
            "brouB" => vec![parallel_lines(c, b)?],
            "brouC" => vec![skew_lines(c, b)?],
            "brouE" => vec![translation_moves(c, b)?],
            "brouF" => vec![scalar_kills_translation(c, b)?],
            "brouH" => vec![shifted_lines(c, b)?, unit_point_outside(c, b)?],
            "brouJ" => vec![points_apart(c, b)?, point_outside(c, b)?, skew_lines(c, b)?],
            "brouK" => vec![translation_pencil(c, b)?],
            "brouL" => vec![scaling_injective(c, b)?],
            _ => unreachable!("canonical ids only"),
        };
        instances.push(Instance {
            c: label.to_string(),
            attempts,
        });
    }
    Ok(DemoReport {
        example: id.to_string(),
        statement,
        implies,
        budget,
        instances,
    })
}

fn attempt(label: &str, question: &str, r: Result<(String, String, bool)>) -> Result<Attempt> {
    let outcome = match r {
        Ok((answer, witness, verified)) => DemoOutcome::Decided {
            answer,
            witness,
            verified,
        },
        Err(Error::Undecided { budget }) => DemoOutcome::Undecided { budget },
        Err(e) => return Err(e),
    };
    Ok(Attempt {
        label: label.into(),
        question: question.into(),
        outcome,
    })
}

fn ints(c: &FieldValue, x: i64, y: i64) -> Point {
    Point::from_ints(&c.backend(), x, y)
}

/// `y = k·x + h`.
fn line(c: &FieldValue, k: &FieldValue, h: i64, b: Budget) -> Result<Line> {
    let base = Point::new(c.zero_like(), c.backend().int(h))?;
    let dir = Point::new(c.one_like(), k.clone())?;
    Line::new(base, dir, Some(b))
}

/// `P = (0, c)` against `Q = (0, 0)`.
fn points_apart(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let p = Point::new(c.zero_like(), c.clone())?;
    let q = ints(c, 0, 0);
    let r = match p.apart(&q, Some(b)) {
        Ok(Some(w)) => Ok(("P ≠ Q".into(), format!("{:?}: {}", w.axis, w.witness), p.verify_apart(&q, &w))),
        Ok(None) => Ok(("P = Q".into(), "exact".into(), p.exact_eq(&q) == Some(true))),
        Err(e) => Err(e),
    };
    attempt("points", "P = (0,c) apart from (0,0)?", r)
}

/// `P = (0, c)` against `y = 0`.
fn point_outside(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let p = Point::new(c.zero_like(), c.clone())?;
    let l = line(c, &c.zero_like(), 0, b)?;
    let r = plane::outside(&p, &l, Some(b))
        .map(|w| ("P ∉ l".into(), w.witness.to_string(), plane::verify_outside(&p, &l, &w)));
    attempt("incidence", "P = (0,c) outside y = 0?", r)
}

/// `y = 0` against `y = cx`.
fn skew_lines(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let l = line(c, &c.zero_like(), 0, b)?;
    let m = line(c, c, 0, b)?;
    let r = plane::nonparallel(&l, &m, Some(b)).and_then(|w| {
        let x = plane::intersect(&l, &m, &w)?;
        Ok((
            format!("l ∦ m, meeting at {x}"),
            w.witness.to_string(),
            plane::verify_nonparallel(&l, &m, &w),
        ))
    });
    attempt("parallelism", "y = 0 nonparallel to y = cx?", r)
}

/// `y = 0` against `y = c`: a point of one outside the other shows them
/// distinct, hence disjoint.
fn parallel_lines(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let l = line(c, &c.zero_like(), 0, b)?;
    let m = Line::new(Point::new(c.zero_like(), c.clone())?, ints(c, 1, 0), Some(b))?;
    let r = plane::line_apart(&l, &m, Some(b)).map(|sep| {
        let (on, off) = match sep.on {
            Side::First => (&l, &m),
            Side::Second => (&m, &l),
        };
        let ok = plane::verify_outside(&sep.point, off, &sep.witness)
            && plane::on_line(&sep.point, on, Some(b)).is_ok_and(|d| d != plane::Decision::No);
        (
            format!("l ≠ m, so l ∩ m = ∅; {} separates", sep.point),
            sep.witness.witness.to_string(),
            ok,
        )
    });
    attempt("parallel", "y = 0 and y = c equal or disjoint?", r)
}

/// `σX = X + (c, 0)`.
fn translation_moves(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let t = Translation::new(Point::new(c.clone(), c.zero_like())?);
    let r = match t.apart_identity(Some(b)) {
        Ok(Some(w)) => Ok((
            "σ ≠ 1, no fixed point".into(),
            w.witness.to_string(),
            t.offset().coord(w.axis).verify_apart_zero(&w.witness),
        )),
        Ok(None) => Ok(("σ = 1".into(), "exact".into(), t.is_identity(None)? == plane::Decision::Yes)),
        Err(e) => Err(e),
    };
    attempt("identity", "X ↦ X + (c,0) distinct from the identity?", r)
}

/// `d = max(c, 0)`, `e = min(c, 0)`, `τ = τ_(e,0)`, `α = α_d`, so `τ^α = 1`.
fn scalar_kills_translation(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let d = c.max(&c.zero_like())?;
    let e = c.min(&c.zero_like())?;
    let tau = Translation::new(Point::new(e.clone(), c.zero_like())?);
    let image = Scalar::new(d.clone()).apply(&tau)?;
    let r = match race_apart_zero(&[&d, &e], Some(b))? {
        Race::Found(0, w) => Ok((
            format!("α ≠ 0, so τ = 1 (τ^α = {})", image.offset()),
            format!("d: {w}"),
            d.verify_apart_zero(&w),
        )),
        Race::Found(_, w) => Ok((
            format!("τ ≠ 1, so α = 0 (τ^α = {})", image.offset()),
            format!("e: {w}"),
            e.verify_apart_zero(&w),
        )),
        Race::NoneApart => Ok((
            "α = 0 and τ = 1".into(),
            "exact".into(),
            d.is_zero_exact() == Some(true) && e.is_zero_exact() == Some(true),
        )),
        Race::Undecided(budget) => Err(Error::Undecided { budget }),
    };
    attempt("kernel", "τ^α = 1: α = 0 or τ = 1?", r)
}

/// `τX = X + (d, e)`.
fn translation_pencil(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let d = c.max(&c.zero_like())?;
    let e = c.min(&c.zero_like())?;
    let t = Translation::new(Point::new(d, e)?);
    let r = t.direction(Some(b)).map(|pencil| {
        let w = pencil.witness();
        (
            format!("traces lie in the pencil of {}", pencil.dir()),
            w.witness.to_string(),
            pencil.dir().coord(w.axis).verify_apart_zero(&w.witness),
        )
    });
    let r = match r {
        Err(Error::BaseIsIdentity) => Ok(("τ = 1 has no traces".into(), "exact".into(), true)),
        other => other,
    };
    attempt("pencil", "a pencil containing every trace of X ↦ X + (d,e)?", r)
}

/// `X ↦ cX`.
fn scaling_injective(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let r = match Dilatation::new(c.clone(), ints(c, 0, 0), Some(b)) {
        Ok(s) => Ok((
            "X ↦ cX is injective".into(),
            s.ratio_witness().to_string(),
            s.ratio().verify_apart_zero(s.ratio_witness()),
        )),
        Err(Error::ScalarZero) => Ok(("X ↦ cX is degenerate".into(), "exact".into(), c.is_zero_exact() == Some(true))),
        Err(e) => Err(e),
    };
    attempt("degenerate", "X ↦ cX injective?", r)
}

/// `y = 0` against `y = cx + 1`.
fn shifted_lines(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let l = line(c, &c.zero_like(), 0, b)?;
    let m = line(c, c, 1, b)?;
    let r = plane::nonparallel(&l, &m, Some(b)).and_then(|w| {
        let x = plane::intersect(&l, &m, &w)?;
        Ok((
            format!("l ∦ m, meeting at {x}"),
            w.witness.to_string(),
            plane::verify_nonparallel(&l, &m, &w),
        ))
    });
    attempt("common-point", "y = 0 nonparallel to y = cx + 1?", r)
}

/// `(1, 0)` against `y = cx`.
fn unit_point_outside(c: &FieldValue, b: Budget) -> Result<Attempt> {
    let p = ints(c, 1, 0);
    let m = line(c, c, 0, b)?;
    let r = plane::outside(&p, &m, Some(b))
        .map(|w| ("(1,0) ∉ m".into(), w.witness.to_string(), plane::verify_outside(&p, &m, &w)));
    attempt("outside", "(1,0) outside y = cx?", r)
}
