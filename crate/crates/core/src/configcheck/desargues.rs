//! Desargues (parallel and concurrent forms) and Pappus configurations.

use std::fmt;

use serde_json::{json, Value};

use super::Sampler;
use crate::error::{Error, Result};
use crate::field::{Backend, Budget, FieldValue};
use crate::plane::{self, Decision, FinitePlane, Line, NonparallelWitness, Point};
use crate::symmetry::Dilatation;

#[derive(Clone, Debug)]
pub enum CheckOutcome {
    HypothesisFails(String),
    Holds,
    /// The conclusion lines are nonparallel, with the witness.
    Violated(NonparallelWitness),
    Undecided(u32),
}

impl CheckOutcome {
    pub fn label(&self) -> &'static str {
        match self {
            CheckOutcome::HypothesisFails(_) => "hypothesis-fails",
            CheckOutcome::Holds => "holds",
            CheckOutcome::Violated(_) => "violated",
            CheckOutcome::Undecided(_) => "undecided",
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            CheckOutcome::HypothesisFails(why) => json!({ "outcome": self.label(), "reason": why }),
            CheckOutcome::Holds => json!({ "outcome": self.label() }),
            CheckOutcome::Violated(w) => json!({
                "outcome": self.label(),
                "det": w.det.to_json(),
                "witness": w.witness.to_string(),
            }),
            CheckOutcome::Undecided(b) => json!({ "outcome": self.label(), "budget": b }),
        }
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckOutcome::HypothesisFails(why) => write!(f, "hypothesis fails: {why}"),
            CheckOutcome::Holds => write!(f, "holds"),
            CheckOutcome::Violated(w) => write!(f, "violated: conclusion lines meet (det {}, {})", w.det, w.witness),
            CheckOutcome::Undecided(b) => write!(f, "undecided at budget {b}"),
        }
    }
}

/// Early exit from a check: either a finished outcome or a hard error.
enum Stop {
    Outcome(CheckOutcome),
    Error(Error),
}

impl From<Error> for Stop {
    fn from(e: Error) -> Self {
        Stop::Error(e)
    }
}

type Step<T = ()> = std::result::Result<T, Stop>;

fn finish(r: Step<CheckOutcome>) -> Result<CheckOutcome> {
    match r {
        Ok(o) | Err(Stop::Outcome(o)) => Ok(o),
        Err(Stop::Error(e)) => Err(e),
    }
}

fn fails(why: impl Into<String>) -> Stop {
    Stop::Outcome(CheckOutcome::HypothesisFails(why.into()))
}

fn on(p: &Point, name: &str, l: &Line, line: &str, budget: Option<Budget>) -> Step {
    match plane::on_line(p, l, budget)? {
        Decision::Yes => Ok(()),
        Decision::No => Err(Stop::Error(Error::Malformed(format!("{name} is not on {line}")))),
        Decision::Undecided(b) => Err(Stop::Outcome(CheckOutcome::Undecided(b))),
    }
}

fn parallel(l: &Line, m: &Line, what: &str, budget: Option<Budget>) -> Step {
    match plane::is_parallel(l, m, budget)? {
        Decision::Yes => Ok(()),
        Decision::No => Err(fails(format!("{what} are not parallel"))),
        Decision::Undecided(b) => Err(Stop::Outcome(CheckOutcome::Undecided(b))),
    }
}

fn distinct(l: &Line, m: &Line, what: &str, budget: Option<Budget>) -> Step {
    match plane::lines_equal(l, m, budget)? {
        Decision::No => Ok(()),
        Decision::Yes => Err(fails(format!("{what} are equal"))),
        Decision::Undecided(b) => Err(Stop::Outcome(CheckOutcome::Undecided(b))),
    }
}

fn apart(p: &Point, q: &Point, what: &str, budget: Option<Budget>) -> Step {
    match p.apart(q, budget) {
        Ok(Some(_)) => Ok(()),
        Ok(None) => Err(fails(format!("{what} coincide"))),
        Err(Error::Undecided { budget }) => Err(Stop::Outcome(CheckOutcome::Undecided(budget))),
        Err(e) => Err(e.into()),
    }
}

fn joined(p: &Point, q: &Point, budget: Option<Budget>) -> Step<Line> {
    match plane::join(p, q, budget) {
        Ok(l) => Ok(l),
        Err(Error::Undecided { budget }) => Err(Stop::Outcome(CheckOutcome::Undecided(budget))),
        Err(e) => Err(e.into()),
    }
}

/// `a + b ∥ c + d` is the conclusion: Holds, or Violated with the witness.
fn conclude(l: &Line, m: &Line, budget: Option<Budget>) -> Step<CheckOutcome> {
    match plane::nonparallel(l, m, budget) {
        Ok(w) => Ok(CheckOutcome::Violated(w)),
        Err(Error::Parallel) => Ok(CheckOutcome::Holds),
        Err(Error::Undecided { budget }) => Ok(CheckOutcome::Undecided(budget)),
        Err(e) => Err(e.into()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// Three distinct parallel lines.
    D1,
    /// Three distinct lines concurrent at `V`.
    D2,
}

#[derive(Clone, Debug)]
pub struct DesarguesConfig {
    pub variant: Variant,
    pub lines: [Line; 3],
    pub p: Point,
    pub pp: Point,
    pub q: Point,
    pub qp: Point,
    pub r: Point,
    pub rp: Point,
    pub v: Option<Point>,
}

fn field<'a>(v: &'a Value, k: &str) -> Result<&'a Value> {
    v.get(k).ok_or_else(|| Error::Malformed(format!("missing {k:?}")))
}

fn point_field(backend: &Backend, v: &Value, k: &str) -> Result<Point> {
    Point::from_json(backend, field(v, k)?)
}

fn line_field(backend: &Backend, v: &Value, k: &str, budget: Option<Budget>) -> Result<Line> {
    Line::from_json(backend, field(v, k)?, budget)
}

impl DesarguesConfig {
    /// Keys `l1 l2 l3 P Pp Q Qp R Rp` and, for D2, `V`.
    pub fn from_json(variant: Variant, backend: &Backend, v: &Value, budget: Option<Budget>) -> Result<Self> {
        Ok(DesarguesConfig {
            variant,
            lines: [
                line_field(backend, v, "l1", budget)?,
                line_field(backend, v, "l2", budget)?,
                line_field(backend, v, "l3", budget)?,
            ],
            p: point_field(backend, v, "P")?,
            pp: point_field(backend, v, "Pp")?,
            q: point_field(backend, v, "Q")?,
            qp: point_field(backend, v, "Qp")?,
            r: point_field(backend, v, "R")?,
            rp: point_field(backend, v, "Rp")?,
            v: match (variant, v.get("V")) {
                (Variant::D2, None) => return Err(Error::Malformed("missing \"V\"".into())),
                (_, Some(p)) => Some(Point::from_json(backend, p)?),
                (_, None) => None,
            },
        })
    }

    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "kind": match self.variant { Variant::D1 => "d1", Variant::D2 => "d2" },
            "l1": self.lines[0].to_json(),
            "l2": self.lines[1].to_json(),
            "l3": self.lines[2].to_json(),
            "P": self.p.to_json(),
            "Pp": self.pp.to_json(),
            "Q": self.q.to_json(),
            "Qp": self.qp.to_json(),
            "R": self.r.to_json(),
            "Rp": self.rp.to_json(),
        });
        if let Some(v) = &self.v {
            out["V"] = v.to_json();
        }
        out
    }

    fn incidences(&self, budget: Option<Budget>) -> Step {
        let [l1, l2, l3] = &self.lines;
        on(&self.p, "P", l1, "l1", budget)?;
        on(&self.pp, "P'", l1, "l1", budget)?;
        on(&self.q, "Q", l2, "l2", budget)?;
        on(&self.qp, "Q'", l2, "l2", budget)?;
        on(&self.r, "R", l3, "l3", budget)?;
        on(&self.rp, "R'", l3, "l3", budget)
    }

    fn lines_distinct(&self, budget: Option<Budget>) -> Step {
        let [l1, l2, l3] = &self.lines;
        distinct(l1, l2, "l1 and l2", budget)?;
        distinct(l1, l3, "l1 and l3", budget)?;
        distinct(l2, l3, "l2 and l3", budget)
    }

    /// `P + Q ∥ P′ + Q′` and `P + R ∥ P′ + R′`, then the conclusion `Q + R ∥ Q′ + R′`.
    fn triangles(&self, budget: Option<Budget>) -> Step<CheckOutcome> {
        let pq = joined(&self.p, &self.q, budget)?;
        let ppqp = joined(&self.pp, &self.qp, budget)?;
        parallel(&pq, &ppqp, "P+Q and P'+Q'", budget)?;
        let pr = joined(&self.p, &self.r, budget)?;
        let pprp = joined(&self.pp, &self.rp, budget)?;
        parallel(&pr, &pprp, "P+R and P'+R'", budget)?;
        let qr = joined(&self.q, &self.r, budget)?;
        let qprp = joined(&self.qp, &self.rp, budget)?;
        conclude(&qr, &qprp, budget)
    }
}

pub fn check_d1(cfg: &DesarguesConfig, budget: Option<Budget>) -> Result<CheckOutcome> {
    finish((|| {
        cfg.incidences(budget)?;
        let [l1, l2, l3] = &cfg.lines;
        parallel(l1, l2, "l1 and l2", budget)?;
        parallel(l1, l3, "l1 and l3", budget)?;
        cfg.lines_distinct(budget)?;
        cfg.triangles(budget)
    })())
}

pub fn check_d2(cfg: &DesarguesConfig, budget: Option<Budget>) -> Result<CheckOutcome> {
    let v = cfg
        .v
        .as_ref()
        .ok_or_else(|| Error::Malformed("concurrent configuration needs V".into()))?;
    finish((|| {
        cfg.incidences(budget)?;
        for (i, l) in cfg.lines.iter().enumerate() {
            match plane::on_line(v, l, budget)? {
                Decision::Yes => {}
                Decision::No => return Err(fails(format!("V is not on l{}", i + 1))),
                Decision::Undecided(b) => return Ok(CheckOutcome::Undecided(b)),
            }
        }
        cfg.lines_distinct(budget)?;
        for (p, name) in [
            (&cfg.p, "P and V"),
            (&cfg.pp, "P' and V"),
            (&cfg.q, "Q and V"),
            (&cfg.qp, "Q' and V"),
            (&cfg.r, "R and V"),
            (&cfg.rp, "R' and V"),
        ] {
            apart(p, v, name, budget)?;
        }
        cfg.triangles(budget)
    })())
}

#[derive(Clone, Debug)]
pub struct PappusConfig {
    pub l: Line,
    pub m: Line,
    pub p: Point,
    pub q: Point,
    pub qp: Point,
    pub qpp: Point,
    pub r: Point,
    pub rp: Point,
    pub rpp: Point,
}

impl PappusConfig {
    /// Keys `l m P Q Qp Qpp R Rp Rpp`.
    pub fn from_json(backend: &Backend, v: &Value, budget: Option<Budget>) -> Result<Self> {
        Ok(PappusConfig {
            l: line_field(backend, v, "l", budget)?,
            m: line_field(backend, v, "m", budget)?,
            p: point_field(backend, v, "P")?,
            q: point_field(backend, v, "Q")?,
            qp: point_field(backend, v, "Qp")?,
            qpp: point_field(backend, v, "Qpp")?,
            r: point_field(backend, v, "R")?,
            rp: point_field(backend, v, "Rp")?,
            rpp: point_field(backend, v, "Rpp")?,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "kind": "pappus",
            "l": self.l.to_json(),
            "m": self.m.to_json(),
            "P": self.p.to_json(),
            "Q": self.q.to_json(),
            "Qp": self.qp.to_json(),
            "Qpp": self.qpp.to_json(),
            "R": self.r.to_json(),
            "Rp": self.rp.to_json(),
            "Rpp": self.rpp.to_json(),
        })
    }
}

/// Points on `l` and `m` need only be apart from `P`, not from each other.
pub fn check_pappus(cfg: &PappusConfig, budget: Option<Budget>) -> Result<CheckOutcome> {
    finish((|| {
        for (p, name) in [(&cfg.q, "Q"), (&cfg.qp, "Q'"), (&cfg.qpp, "Q''")] {
            on(p, name, &cfg.l, "l", budget)?;
        }
        for (p, name) in [(&cfg.r, "R"), (&cfg.rp, "R'"), (&cfg.rpp, "R''")] {
            on(p, name, &cfg.m, "m", budget)?;
        }
        for (l, name) in [(&cfg.l, "l"), (&cfg.m, "m")] {
            match plane::on_line(&cfg.p, l, budget)? {
                Decision::Yes => {}
                Decision::No => return Err(fails(format!("P is not on {name}"))),
                Decision::Undecided(b) => return Ok(CheckOutcome::Undecided(b)),
            }
        }
        match plane::nonparallel(&cfg.l, &cfg.m, budget) {
            Ok(_) => {}
            Err(Error::Parallel) => return Err(fails("l and m are parallel")),
            Err(Error::Undecided { budget }) => return Ok(CheckOutcome::Undecided(budget)),
            Err(e) => return Err(e.into()),
        }
        for (p, name) in [
            (&cfg.q, "Q and P"),
            (&cfg.qp, "Q' and P"),
            (&cfg.qpp, "Q'' and P"),
            (&cfg.r, "R and P"),
            (&cfg.rp, "R' and P"),
            (&cfg.rpp, "R'' and P"),
        ] {
            apart(p, &cfg.p, name, budget)?;
        }
        let a = joined(&cfg.q, &cfg.rp, budget)?;
        let b = joined(&cfg.qp, &cfg.rpp, budget)?;
        parallel(&a, &b, "Q+R' and Q'+R''", budget)?;
        let a = joined(&cfg.qp, &cfg.r, budget)?;
        let b = joined(&cfg.qpp, &cfg.rp, budget)?;
        parallel(&a, &b, "Q'+R and Q''+R'", budget)?;
        let a = joined(&cfg.q, &cfg.r, budget)?;
        let b = joined(&cfg.qpp, &cfg.rpp, budget)?;
        conclude(&a, &b, budget)
    })())
}

fn ordered_triples(pencil: &[usize]) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for &a in pencil {
        for &b in pencil {
            for &c in pencil {
                if a != b && a != c && b != c {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn pairs_on<'a>(fp: &'a FinitePlane, l: &'a Line, avoid: Option<&'a Point>) -> Vec<Point> {
    fp.points_on(l)
        .filter(|p| avoid.is_none_or(|v| p.exact_eq(v) == Some(false)))
        .cloned()
        .collect()
}

/// Every assignment of the six points, for the given ordered line triples.
fn desargues_over(
    fp: &FinitePlane,
    variant: Variant,
    triples: &[([usize; 3], Option<Point>)],
) -> Vec<DesarguesConfig> {
    let mut out = Vec::new();
    for (idx, v) in triples {
        let lines = idx.map(|i| fp.lines[i].clone());
        let pts: Vec<Vec<Point>> = lines.iter().map(|l| pairs_on(fp, l, v.as_ref())).collect();
        for p in &pts[0] {
            for pp in &pts[0] {
                for q in &pts[1] {
                    for qp in &pts[1] {
                        for r in &pts[2] {
                            for rp in &pts[2] {
                                out.push(DesarguesConfig {
                                    variant,
                                    lines: lines.clone(),
                                    p: p.clone(),
                                    pp: pp.clone(),
                                    q: q.clone(),
                                    qp: qp.clone(),
                                    r: r.clone(),
                                    rp: rp.clone(),
                                    v: v.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// All configurations on three distinct parallel lines, valid or not.
pub fn enumerate_d1(fp: &FinitePlane) -> Vec<DesarguesConfig> {
    let triples: Vec<_> = fp
        .pencils
        .iter()
        .flat_map(|pencil| ordered_triples(pencil))
        .map(|t| (t, None))
        .collect();
    desargues_over(fp, Variant::D1, &triples)
}

fn lines_through(fp: &FinitePlane, v: &Point) -> Vec<usize> {
    (0..fp.lines.len())
        .filter(|&i| plane::on_line(v, &fp.lines[i], None).ok() == Some(Decision::Yes))
        .collect()
}

/// All configurations on three distinct lines through a common `V`, with the
/// six points apart from `V`.
pub fn enumerate_d2(fp: &FinitePlane) -> Vec<DesarguesConfig> {
    let mut triples = Vec::new();
    for v in &fp.points {
        for t in ordered_triples(&lines_through(fp, v)) {
            triples.push((t, Some(v.clone())));
        }
    }
    desargues_over(fp, Variant::D2, &triples)
}

/// All configurations on two distinct lines through `P`, points apart from `P`.
pub fn enumerate_pappus(fp: &FinitePlane) -> Vec<PappusConfig> {
    let mut out = Vec::new();
    for p in &fp.points {
        let through = lines_through(fp, p);
        for &i in &through {
            for &j in &through {
                if i == j {
                    continue;
                }
                let (l, m) = (&fp.lines[i], &fp.lines[j]);
                let ls = pairs_on(fp, l, Some(p));
                let ms = pairs_on(fp, m, Some(p));
                for q in &ls {
                    for qp in &ls {
                        for qpp in &ls {
                            for r in &ms {
                                for rp in &ms {
                                    for rpp in &ms {
                                        out.push(PappusConfig {
                                            l: l.clone(),
                                            m: m.clone(),
                                            p: p.clone(),
                                            q: q.clone(),
                                            qp: qp.clone(),
                                            qpp: qpp.clone(),
                                            r: r.clone(),
                                            rp: rp.clone(),
                                            rpp: rpp.clone(),
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Number of configurations the enumerators produce over GF(p).
pub fn enumeration_sizes(p: u64) -> [u64; 3] {
    let d1 = (p + 1) * p * p.saturating_sub(1) * p.saturating_sub(2) * p.pow(6);
    let d2 = p * p * (p + 1) * p * p.saturating_sub(1) * (p - 1).pow(6);
    let pappus = p * p * (p + 1) * p * (p - 1).pow(6);
    [d1, d2, pappus]
}

/// `X ↦ V + e(X − V)`.
fn scaling_about(v: &Point, e: &FieldValue) -> Result<Dilatation> {
    let c = v.try_sub(&v.scale(e)?)?;
    Dilatation::new(e.clone(), c, None)
}

fn distinct_parallel(s: &mut Sampler, l1: &Line) -> Line {
    loop {
        let l = plane::parallel_through(&s.point(), l1).expect("same backend");
        if plane::lines_equal(&l, l1, None).ok() == Some(Decision::No) {
            return l;
        }
    }
}

fn distinct_through(s: &mut Sampler, v: &Point, avoid: &[&Line]) -> Line {
    loop {
        let l = Line::new(v.clone(), s.direction(), None).expect("direction is nonzero");
        if avoid
            .iter()
            .all(|m| plane::lines_equal(&l, m, None).ok() == Some(Decision::No))
        {
            return l;
        }
    }
}

fn point_apart_on(s: &mut Sampler, l: &Line, v: &Point) -> Point {
    loop {
        let p = s.point_on(l);
        if p.exact_eq(v) == Some(false) {
            return p;
        }
    }
}

/// A parallel-lines configuration. With `valid`, the primed points are the
/// image of the unprimed ones under a translation along the lines; otherwise
/// they are arbitrary points of their lines.
pub fn sample_d1(s: &mut Sampler, valid: bool) -> DesarguesConfig {
    let l1 = s.line();
    let l2 = distinct_parallel(s, &l1);
    let l3 = loop {
        let l = distinct_parallel(s, &l1);
        if plane::lines_equal(&l, &l2, None).ok() == Some(Decision::No) {
            break l;
        }
    };
    let (p, q, r) = (s.point_on(&l1), s.point_on(&l2), s.point_on(&l3));
    let (pp, qp, rp) = if valid {
        let shift = l1.dir().scale(&s.value()).expect("same backend");
        let t = |x: &Point| x.try_add(&shift).expect("same backend");
        (t(&p), t(&q), t(&r))
    } else {
        (s.point_on(&l1), s.point_on(&l2), s.point_on(&l3))
    };
    DesarguesConfig {
        variant: Variant::D1,
        lines: [l1, l2, l3],
        p,
        pp,
        q,
        qp,
        r,
        rp,
        v: None,
    }
}

/// A concurrent-lines configuration. With `valid`, the primed points are the
/// image under a dilatation fixing `V`.
pub fn sample_d2(s: &mut Sampler, valid: bool) -> DesarguesConfig {
    let v = s.point();
    let l1 = distinct_through(s, &v, &[]);
    let l2 = distinct_through(s, &v, &[&l1]);
    let l3 = distinct_through(s, &v, &[&l1, &l2]);
    let (p, q, r) = (
        point_apart_on(s, &l1, &v),
        point_apart_on(s, &l2, &v),
        point_apart_on(s, &l3, &v),
    );
    let (pp, qp, rp) = if valid {
        let sigma = scaling_about(&v, &s.nonzero()).expect("ratio is nonzero");
        let f = |x: &Point| sigma.apply(x).expect("same backend");
        (f(&p), f(&q), f(&r))
    } else {
        (
            point_apart_on(s, &l1, &v),
            point_apart_on(s, &l2, &v),
            point_apart_on(s, &l3, &v),
        )
    };
    DesarguesConfig {
        variant: Variant::D2,
        lines: [l1, l2, l3],
        p,
        pp,
        q,
        qp,
        r,
        rp,
        v: Some(v),
    }
}

/// A Pappus configuration. With `valid`, built from two dilatations fixing
/// `P`: `Q′ = σ₁Q`, `R″ = σ₁R′`, `Q″ = σ₂Q′`, `R′ = σ₂R`.
pub fn sample_pappus(s: &mut Sampler, valid: bool) -> PappusConfig {
    let p = s.point();
    let l = distinct_through(s, &p, &[]);
    let m = distinct_through(s, &p, &[&l]);
    let q = point_apart_on(s, &l, &p);
    let r = point_apart_on(s, &m, &p);
    let (qp, qpp, rp, rpp) = if valid {
        let s1 = scaling_about(&p, &s.nonzero()).expect("ratio is nonzero");
        let s2 = scaling_about(&p, &s.nonzero()).expect("ratio is nonzero");
        let qp = s1.apply(&q).expect("same backend");
        let rp = s2.apply(&r).expect("same backend");
        let qpp = s2.apply(&qp).expect("same backend");
        let rpp = s1.apply(&rp).expect("same backend");
        (qp, qpp, rp, rpp)
    } else {
        (
            point_apart_on(s, &l, &p),
            point_apart_on(s, &l, &p),
            point_apart_on(s, &m, &p),
            point_apart_on(s, &m, &p),
        )
    };
    PappusConfig {
        l,
        m,
        p,
        q,
        qp,
        qpp,
        r,
        rp,
        rpp,
    }
}
