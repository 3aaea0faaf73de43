//! The coordinate plane over a Heyting field.
//!
//! Lines are stored as a base point and a direction whose nonzero coordinate
//! is witnessed. Every disjunctive query (outside, nonparallel, the L1/L2
//! branch choices) returns its witness so callers can re-check it.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{
    race_apart_zero, ApartWitness, Apartness, Backend, Budget, FieldError, FieldValue, Race, ValueKey,
};

#[derive(Clone, Debug)]
pub struct Point {
    pub x: FieldValue,
    pub y: FieldValue,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
}

/// A coordinate in which two points (or a vector and zero) differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointApart {
    pub axis: Axis,
    /// Witness that the coordinate difference is apart from zero.
    pub witness: ApartWitness,
}

/// Three-valued answer for relations that are only semi-decidable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Decision {
    Yes,
    No,
    Undecided(u32),
}

fn cross(ax: &FieldValue, ay: &FieldValue, bx: &FieldValue, by: &FieldValue) -> FieldValue {
    ax * by - ay * bx
}

impl Point {
    pub fn new(x: FieldValue, y: FieldValue) -> Result<Self> {
        x.same_kind(&y)?;
        Ok(Point { x, y })
    }

    pub fn origin(backend: &Backend) -> Self {
        Point {
            x: backend.zero(),
            y: backend.zero(),
        }
    }

    pub fn from_ints(backend: &Backend, x: i64, y: i64) -> Self {
        Point {
            x: backend.int(x),
            y: backend.int(y),
        }
    }

    pub fn backend(&self) -> Backend {
        self.x.backend()
    }

    pub fn coord(&self, axis: Axis) -> &FieldValue {
        match axis {
            Axis::X => &self.x,
            Axis::Y => &self.y,
        }
    }

    pub fn same_kind(&self, other: &Point) -> Result<()> {
        Ok(self.x.same_kind(&other.x)?)
    }

    pub fn try_add(&self, other: &Point) -> Result<Point> {
        Ok(Point {
            x: self.x.try_add(&other.x)?,
            y: self.y.try_add(&other.y)?,
        })
    }

    pub fn try_sub(&self, other: &Point) -> Result<Point> {
        Ok(Point {
            x: self.x.try_sub(&other.x)?,
            y: self.y.try_sub(&other.y)?,
        })
    }

    pub fn scale(&self, s: &FieldValue) -> Result<Point> {
        Ok(Point {
            x: s.try_mul(&self.x)?,
            y: s.try_mul(&self.y)?,
        })
    }

    pub fn neg(&self) -> Point {
        Point {
            x: -&self.x,
            y: -&self.y,
        }
    }

    /// `x(self) · y(other) − y(self) · x(other)`.
    pub fn cross(&self, other: &Point) -> Result<FieldValue> {
        self.same_kind(other)?;
        Ok(cross(&self.x, &self.y, &other.x, &other.y))
    }

    /// Searches for a coordinate apart from zero, x first.
    pub fn apart_zero(&self, budget: Option<Budget>) -> Result<Option<PointApart>> {
        match race_apart_zero(&[&self.x, &self.y], budget)? {
            Race::Found(i, witness) => Ok(Some(PointApart {
                axis: if i == 0 { Axis::X } else { Axis::Y },
                witness,
            })),
            Race::NoneApart => Ok(None),
            Race::Undecided(budget) => Err(Error::Undecided { budget }),
        }
    }

    /// `Some` with a witness when apart, `None` when equal (decidable backends only).
    pub fn apart(&self, other: &Point, budget: Option<Budget>) -> Result<Option<PointApart>> {
        self.try_sub(other)?.apart_zero(budget)
    }

    pub fn verify_apart(&self, other: &Point, w: &PointApart) -> bool {
        match self.try_sub(other) {
            Ok(d) => d.coord(w.axis).verify_apart_zero(&w.witness),
            Err(_) => false,
        }
    }

    /// Exact equality on decidable backends.
    pub fn exact_eq(&self, other: &Point) -> Option<bool> {
        Some(self.x.exact_eq(&other.x)? && self.y.exact_eq(&other.y)?)
    }

    pub fn key(&self) -> Option<(ValueKey, ValueKey)> {
        Some((self.x.key()?, self.y.key()?))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "x": self.x.to_json(), "y": self.y.to_json() })
    }

    pub fn from_json(backend: &Backend, v: &serde_json::Value) -> Result<Self> {
        let get = |k: &str| {
            v.get(k)
                .ok_or_else(|| FieldError::Parse(format!("point is missing {k:?}")))
                .and_then(|c| FieldValue::from_json(backend, c))
        };
        Ok(Point { x: get("x")?, y: get("y")? })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `{base + t·dir : t ∈ k}` with `dir` witnessed nonzero.
#[derive(Clone, Debug)]
pub struct Line {
    base: Point,
    dir: Point,
    dir_witness: PointApart,
}

impl Line {
    pub fn new(base: Point, dir: Point, budget: Option<Budget>) -> Result<Self> {
        base.same_kind(&dir)?;
        match dir.apart_zero(budget)? {
            Some(dir_witness) => Ok(Line { base, dir, dir_witness }),
            None => Err(Error::ZeroDirection),
        }
    }

    /// Builds a line from a caller-supplied direction witness, checking it.
    pub fn with_witness(base: Point, dir: Point, dir_witness: PointApart) -> Result<Self> {
        base.same_kind(&dir)?;
        if !dir.coord(dir_witness.axis).verify_apart_zero(&dir_witness.witness) {
            return Err(Error::MissingWitness("line direction"));
        }
        Ok(Line { base, dir, dir_witness })
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn dir(&self) -> &Point {
        &self.dir
    }

    pub fn dir_witness(&self) -> &PointApart {
        &self.dir_witness
    }

    pub fn backend(&self) -> Backend {
        self.base.backend()
    }

    /// `base + t·dir`.
    pub fn point_at(&self, t: &FieldValue) -> Result<Point> {
        self.base.try_add(&self.dir.scale(t)?)
    }

    /// Cross value of `p` against this line; zero exactly on the line.
    pub fn cross_of(&self, p: &Point) -> Result<FieldValue> {
        p.try_sub(&self.base)?.cross(&self.dir)
    }

    /// Unique representative on decidable backends: the witnessed direction
    /// coordinate scaled to 1 and the base moved to where that coordinate is 0.
    pub fn canonical(&self) -> Option<CanonicalLine> {
        if !self.base.x.is_decidable() {
            return None;
        }
        let (lead, axis) = if self.dir.x.is_zero_exact()? {
            (&self.dir.y, Axis::Y)
        } else {
            (&self.dir.x, Axis::X)
        };
        let dir = self.dir.scale(&lead.inv(None).ok()?).ok()?;
        let t = -self.base.coord(axis);
        let base = self.base.try_add(&dir.scale(&t).ok()?).ok()?;
        Some(CanonicalLine {
            dir: dir.key()?,
            base: base.key()?,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "base": self.base.to_json(), "dir": self.dir.to_json() })
    }

    pub fn from_json(backend: &Backend, v: &serde_json::Value, budget: Option<Budget>) -> Result<Self> {
        let get = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Field(FieldError::Parse(format!("line is missing {k:?}"))))
                .and_then(|p| Point::from_json(backend, p))
        };
        Line::new(get("base")?, get("dir")?, budget)
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + t{}", self.base, self.dir)
    }
}

/// Hashable normal form of a line over a decidable backend.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLine {
    pub dir: (ValueKey, ValueKey),
    pub base: (ValueKey, ValueKey),
}

/// Evidence that a point lies outside a line: its cross value is apart from 0.
#[derive(Clone, Debug)]
pub struct OutsideWitness {
    pub cross: FieldValue,
    pub witness: ApartWitness,
}

/// Evidence that two lines are nonparallel: the direction determinant is apart from 0.
#[derive(Clone, Debug)]
pub struct NonparallelWitness {
    pub det: FieldValue,
    pub witness: ApartWitness,
}

#[derive(Clone, Debug)]
pub enum BranchChoice<W> {
    First(W),
    Second(W),
}

impl<W> BranchChoice<W> {
    pub fn is_first(&self) -> bool {
        matches!(self, BranchChoice::First(_))
    }

    pub fn witness(&self) -> &W {
        match self {
            BranchChoice::First(w) | BranchChoice::Second(w) => w,
        }
    }
}

pub fn on_line(p: &Point, l: &Line, budget: Option<Budget>) -> Result<Decision> {
    Ok(match l.cross_of(p)?.apart_zero(budget)? {
        Apartness::Apart(_) => Decision::No,
        Apartness::NotApart => Decision::Yes,
        Apartness::Undecided(b) => Decision::Undecided(b),
    })
}

pub fn outside(p: &Point, l: &Line, budget: Option<Budget>) -> Result<OutsideWitness> {
    let cross = l.cross_of(p)?;
    match cross.apart_zero(budget)? {
        Apartness::Apart(witness) => Ok(OutsideWitness { cross, witness }),
        Apartness::NotApart => Err(Error::NotOutside),
        Apartness::Undecided(budget) => Err(Error::Undecided { budget }),
    }
}

pub fn verify_outside(p: &Point, l: &Line, w: &OutsideWitness) -> bool {
    match l.cross_of(p) {
        Ok(c) => c.verify_apart_zero(&w.witness),
        Err(_) => false,
    }
}

pub fn join(p: &Point, q: &Point, budget: Option<Budget>) -> Result<Line> {
    let dir = q.try_sub(p)?;
    match dir.apart_zero(budget)? {
        Some(dir_witness) => Ok(Line {
            base: p.clone(),
            dir,
            dir_witness,
        }),
        None => Err(Error::PointsNotApart),
    }
}

pub fn parallel_through(p: &Point, l: &Line) -> Result<Line> {
    p.same_kind(&l.base)?;
    Ok(Line {
        base: p.clone(),
        dir: l.dir.clone(),
        dir_witness: l.dir_witness.clone(),
    })
}

fn det(l: &Line, m: &Line) -> Result<FieldValue> {
    l.dir.cross(&m.dir)
}

pub fn nonparallel(l: &Line, m: &Line, budget: Option<Budget>) -> Result<NonparallelWitness> {
    let det = det(l, m)?;
    match det.apart_zero(budget)? {
        Apartness::Apart(witness) => Ok(NonparallelWitness { det, witness }),
        Apartness::NotApart => Err(Error::Parallel),
        Apartness::Undecided(budget) => Err(Error::Undecided { budget }),
    }
}

/// Accepts a witness produced for either order of the pair.
pub fn verify_nonparallel(l: &Line, m: &Line, w: &NonparallelWitness) -> bool {
    match det(l, m) {
        Ok(d) => d.verify_apart_zero(&w.witness) || (-&d).verify_apart_zero(&w.witness),
        Err(_) => false,
    }
}

/// The common point of two nonparallel lines.
pub fn intersect(l: &Line, m: &Line, w: &NonparallelWitness) -> Result<Point> {
    let d = det(l, m)?;
    let inv = match d.inv_witnessed(&w.witness) {
        Ok(inv) => inv,
        Err(_) => (-&d)
            .inv_witnessed(&w.witness)
            .map(|i| -i)
            .map_err(|_| Error::MissingWitness("nonparallel"))?,
    };
    let t = m.base.try_sub(&l.base)?.cross(&m.dir)? * inv;
    l.point_at(&t)
}

/// Given nonparallel `l`, `m` and a point `q` off their intersection, picks a
/// line that `q` lies outside, testing `l` first.
pub fn l1_decide(
    l: &Line,
    m: &Line,
    w: &NonparallelWitness,
    q: &Point,
    budget: Option<Budget>,
) -> Result<BranchChoice<OutsideWitness>> {
    if !verify_nonparallel(l, m, w) {
        return Err(Error::MissingWitness("nonparallel"));
    }
    outside_either(q, l, m, budget)
}

/// Races the outside tests of `p` against `l` and `m`, `l` first.
pub fn outside_either(p: &Point, l: &Line, m: &Line, budget: Option<Budget>) -> Result<BranchChoice<OutsideWitness>> {
    let cl = l.cross_of(p)?;
    let cm = m.cross_of(p)?;
    match race_apart_zero(&[&cl, &cm], budget)? {
        Race::Found(0, witness) => Ok(BranchChoice::First(OutsideWitness { cross: cl, witness })),
        Race::Found(_, witness) => Ok(BranchChoice::Second(OutsideWitness { cross: cm, witness })),
        Race::NoneApart => Err(Error::PointsNotApart),
        Race::Undecided(budget) => Err(Error::Undecided { budget }),
    }
}

/// Given nonparallel `l`, `m`, picks one of them that `n` is nonparallel to.
pub fn l2_decide(
    l: &Line,
    m: &Line,
    w: &NonparallelWitness,
    n: &Line,
    budget: Option<Budget>,
) -> Result<BranchChoice<NonparallelWitness>> {
    if !verify_nonparallel(l, m, w) {
        return Err(Error::MissingWitness("nonparallel"));
    }
    let dl = det(n, l)?;
    let dm = det(n, m)?;
    match race_apart_zero(&[&dl, &dm], budget)? {
        Race::Found(0, witness) => Ok(BranchChoice::First(NonparallelWitness { det: dl, witness })),
        Race::Found(_, witness) => Ok(BranchChoice::Second(NonparallelWitness { det: dm, witness })),
        Race::NoneApart => Err(Error::Parallel),
        Race::Undecided(budget) => Err(Error::Undecided { budget }),
    }
}

/// Which of the two lines carries the separating point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

#[derive(Clone, Debug)]
pub struct LineSeparation {
    pub point: Point,
    /// The line the point lies on; it is outside the other one.
    pub on: Side,
    pub witness: OutsideWitness,
}

/// Finds a point on one line outside the other. Candidates are the base and
/// base + dir of `l`, then of `m`, raced in lockstep.
pub fn line_apart(l: &Line, m: &Line, budget: Option<Budget>) -> Result<LineSeparation> {
    let candidates = [
        (l.base.clone(), Side::First),
        (l.base.try_add(&l.dir)?, Side::First),
        (m.base.clone(), Side::Second),
        (m.base.try_add(&m.dir)?, Side::Second),
    ];
    let crosses = candidates
        .iter()
        .map(|(p, side)| match side {
            Side::First => m.cross_of(p),
            Side::Second => l.cross_of(p),
        })
        .collect::<Result<Vec<_>>>()?;
    let refs: Vec<&FieldValue> = crosses.iter().collect();
    match race_apart_zero(&refs, budget)? {
        Race::Found(i, witness) => Ok(LineSeparation {
            point: candidates[i].0.clone(),
            on: candidates[i].1,
            witness: OutsideWitness {
                cross: crosses[i].clone(),
                witness,
            },
        }),
        Race::NoneApart => Err(Error::LinesEqual),
        Race::Undecided(budget) => Err(Error::Undecided { budget }),
    }
}

/// Semantic equality: each base on the other line and directions parallel.
pub fn lines_equal(l: &Line, m: &Line, budget: Option<Budget>) -> Result<Decision> {
    match line_apart(l, m, budget) {
        Ok(_) => Ok(Decision::No),
        Err(Error::LinesEqual) => Ok(Decision::Yes),
        Err(Error::Undecided { budget }) => Ok(Decision::Undecided(budget)),
        Err(e) => Err(e),
    }
}

pub fn is_parallel(l: &Line, m: &Line, budget: Option<Budget>) -> Result<Decision> {
    Ok(match det(l, m)?.apart_zero(budget)? {
        Apartness::Apart(_) => Decision::No,
        Apartness::NotApart => Decision::Yes,
        Apartness::Undecided(b) => Decision::Undecided(b),
    })
}

/// `O = (0,0)`, `E1 = (1,0)`, `E2 = (0,1)`.
pub fn canonical_frame(backend: &Backend) -> (Point, Point, Point) {
    (
        Point::from_ints(backend, 0, 0),
        Point::from_ints(backend, 1, 0),
        Point::from_ints(backend, 0, 1),
    )
}

/// The affine plane AG(2, p), enumerated with canonical line representatives.
pub struct FinitePlane {
    pub backend: Backend,
    pub points: Vec<Point>,
    pub lines: Vec<Line>,
    /// Lines grouped by direction: `pencils[i]` holds the indices into `lines`.
    pub pencils: Vec<Vec<usize>>,
}

impl FinitePlane {
    pub fn new(backend: Backend) -> Option<Self> {
        let elems = backend.elements()?;
        let mut points = Vec::new();
        for x in &elems {
            for y in &elems {
                points.push(Point { x: x.clone(), y: y.clone() });
            }
        }
        let mut dirs: Vec<Point> = elems
            .iter()
            .map(|s| Point {
                x: backend.one(),
                y: s.clone(),
            })
            .collect();
        dirs.push(Point::from_ints(&backend, 0, 1));
        let mut lines = Vec::new();
        let mut pencils = Vec::new();
        for dir in dirs {
            let mut pencil = Vec::new();
            for b in &elems {
                let base = if dir.x.is_zero_exact() == Some(true) {
                    Point {
                        x: b.clone(),
                        y: backend.zero(),
                    }
                } else {
                    Point {
                        x: backend.zero(),
                        y: b.clone(),
                    }
                };
                pencil.push(lines.len());
                lines.push(Line::new(base, dir.clone(), None).expect("direction is nonzero"));
            }
            pencils.push(pencil);
        }
        Some(FinitePlane {
            backend,
            points,
            lines,
            pencils,
        })
    }

    pub fn points_on<'a>(&'a self, l: &'a Line) -> impl Iterator<Item = &'a Point> + 'a {
        self.points
            .iter()
            .filter(move |p| matches!(on_line(p, l, None), Ok(Decision::Yes)))
    }
}
