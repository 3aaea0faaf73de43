//! Dilatations `X ↦ eX + C` and translations `X ↦ X + C` in closed form,
//! plus the synthetic constructions in [`synthetic`].

pub mod synthetic;

use std::fmt;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::field::{ApartWitness, Apartness, Backend, Budget, FieldError, FieldValue};
use crate::plane::{self, Decision, Line, Point, PointApart};

#[derive(Clone, Debug)]
pub struct Dilatation {
    e: FieldValue,
    e_witness: ApartWitness,
    c: Point,
}

fn lower_bound(v: &FieldValue, w: &ApartWitness) -> BigRational {
    v.abs_lower_bound(w).unwrap_or_else(BigRational::one)
}

impl Dilatation {
    /// Decides that `e` is apart from zero; zero is rejected as `ScalarZero`.
    pub fn new(e: FieldValue, c: Point, budget: Option<Budget>) -> Result<Self> {
        e.same_kind(&c.x)?;
        match e.apart_zero(budget)? {
            Apartness::Apart(e_witness) => Ok(Dilatation { e, e_witness, c }),
            Apartness::NotApart => Err(Error::ScalarZero),
            Apartness::Undecided(budget) => Err(Error::Undecided { budget }),
        }
    }

    pub fn with_witness(e: FieldValue, e_witness: ApartWitness, c: Point) -> Result<Self> {
        e.same_kind(&c.x)?;
        if !e.verify_apart_zero(&e_witness) {
            return Err(Error::MissingWitness("dilatation ratio"));
        }
        Ok(Dilatation { e, e_witness, c })
    }

    pub fn identity(backend: &Backend) -> Self {
        Translation::identity(backend).to_dilatation()
    }

    pub fn ratio(&self) -> &FieldValue {
        &self.e
    }

    pub fn ratio_witness(&self) -> &ApartWitness {
        &self.e_witness
    }

    pub fn offset(&self) -> &Point {
        &self.c
    }

    pub fn backend(&self) -> Backend {
        self.e.backend()
    }

    pub fn apply(&self, x: &Point) -> Result<Point> {
        x.scale(&self.e)?.try_add(&self.c)
    }

    /// `self ∘ other`: ratio `e₁e₂`, offset `e₁C₂ + C₁`.
    pub fn compose(&self, other: &Dilatation) -> Result<Dilatation> {
        let e = self.e.try_mul(&other.e)?;
        let bound = lower_bound(&self.e, &self.e_witness) * lower_bound(&other.e, &other.e_witness);
        let e_witness = e.apart_zero_given_bound(&bound)?;
        let c = other.c.scale(&self.e)?.try_add(&self.c)?;
        Ok(Dilatation { e, e_witness, c })
    }

    /// Ratio `e⁻¹`, offset `−e⁻¹C`.
    pub fn inverse(&self) -> Result<Dilatation> {
        let inv = self.e.inv_witnessed(&self.e_witness)?;
        let bound = BigRational::one() / self.e.abs_upper_bound();
        let e_witness = inv.apart_zero_given_bound(&bound)?;
        let c = self.c.scale(&inv)?.neg();
        Ok(Dilatation { e: inv, e_witness, c })
    }

    /// `σ τ σ⁻¹`, which is the translation by `eC`.
    pub fn conjugate(&self, t: &Translation) -> Result<Translation> {
        let d = self.compose(&t.to_dilatation())?.compose(&self.inverse()?)?;
        Ok(Translation { c: d.c })
    }

    /// Whether the ratio is 1.
    pub fn is_translation(&self, budget: Option<Budget>) -> Result<Decision> {
        Ok(match self.e.apart(&self.e.one_like(), budget)? {
            Apartness::Apart(_) => Decision::No,
            Apartness::NotApart => Decision::Yes,
            Apartness::Undecided(b) => Decision::Undecided(b),
        })
    }

    pub fn exact_eq(&self, other: &Dilatation) -> Option<bool> {
        Some(self.e.exact_eq(&other.e)? && self.c.exact_eq(&other.c)?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "e": self.e.to_json(), "C": [self.c.x.to_json(), self.c.y.to_json()] })
    }

    pub fn from_json(backend: &Backend, v: &serde_json::Value, budget: Option<Budget>) -> Result<Self> {
        let e = v
            .get("e")
            .ok_or_else(|| FieldError::Parse("dilatation is missing \"e\"".into()))?;
        let e = FieldValue::from_json(backend, e)?;
        Dilatation::new(e, offset_from_json(backend, v)?, budget)
    }
}

fn offset_from_json(backend: &Backend, v: &serde_json::Value) -> Result<Point> {
    let err = || Error::Field(FieldError::Parse(format!("expected \"C\": [x, y] in {v}")));
    let c = v.get("C").and_then(|c| c.as_array()).ok_or_else(err)?;
    if c.len() != 2 {
        return Err(err());
    }
    Point::new(FieldValue::from_json(backend, &c[0])?, FieldValue::from_json(backend, &c[1])?)
}

impl fmt::Display for Dilatation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X -> {}X + {}", self.e, self.c)
    }
}

#[derive(Clone, Debug)]
pub struct Translation {
    c: Point,
}

impl Translation {
    pub fn new(c: Point) -> Self {
        Translation { c }
    }

    pub fn identity(backend: &Backend) -> Self {
        Translation {
            c: Point::origin(backend),
        }
    }

    pub fn offset(&self) -> &Point {
        &self.c
    }

    pub fn apply(&self, x: &Point) -> Result<Point> {
        x.try_add(&self.c)
    }

    pub fn compose(&self, other: &Translation) -> Result<Translation> {
        Ok(Translation {
            c: self.c.try_add(&other.c)?,
        })
    }

    pub fn inverse(&self) -> Translation {
        Translation { c: self.c.neg() }
    }

    pub fn to_dilatation(&self) -> Dilatation {
        let one = self.c.x.one_like();
        let e_witness = match one.apart_zero(Some(Budget::of(2))) {
            Ok(Apartness::Apart(w)) => w,
            _ => unreachable!("1 separates from 0 at precision 2"),
        };
        Dilatation {
            e: one,
            e_witness,
            c: self.c.clone(),
        }
    }

    /// `Some` witness when the offset is apart from zero, `None` for the identity.
    pub fn apart_identity(&self, budget: Option<Budget>) -> Result<Option<PointApart>> {
        self.c.apart_zero(budget)
    }

    pub fn is_identity(&self, budget: Option<Budget>) -> Result<Decision> {
        Ok(match self.apart_identity(budget) {
            Ok(Some(_)) => Decision::No,
            Ok(None) => Decision::Yes,
            Err(Error::Undecided { budget }) => Decision::Undecided(budget),
            Err(e) => return Err(e),
        })
    }

    /// The pencil containing every trace.
    pub fn direction(&self, budget: Option<Budget>) -> Result<Pencil> {
        match self.apart_identity(budget)? {
            Some(witness) => Ok(Pencil {
                dir: self.c.clone(),
                witness,
            }),
            None => Err(Error::BaseIsIdentity),
        }
    }

    pub fn exact_eq(&self, other: &Translation) -> Option<bool> {
        self.c.exact_eq(&other.c)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "C": [self.c.x.to_json(), self.c.y.to_json()] })
    }

    pub fn from_json(backend: &Backend, v: &serde_json::Value) -> Result<Self> {
        Ok(Translation {
            c: offset_from_json(backend, v)?,
        })
    }
}

impl fmt::Display for Translation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X -> X + {}", self.c)
    }
}

/// A class of parallel lines, held as a witnessed nonzero direction.
#[derive(Clone, Debug)]
pub struct Pencil {
    dir: Point,
    witness: PointApart,
}

impl Pencil {
    pub fn of_line(l: &Line) -> Self {
        Pencil {
            dir: l.dir().clone(),
            witness: l.dir_witness().clone(),
        }
    }

    pub fn dir(&self) -> &Point {
        &self.dir
    }

    pub fn witness(&self) -> &PointApart {
        &self.witness
    }

    /// Equal pencils have a vanishing direction determinant.
    pub fn same(&self, other: &Pencil, budget: Option<Budget>) -> Result<Decision> {
        Ok(match self.dir.cross(&other.dir)?.apart_zero(budget)? {
            Apartness::Apart(_) => Decision::No,
            Apartness::NotApart => Decision::Yes,
            Apartness::Undecided(b) => Decision::Undecided(b),
        })
    }

    pub fn contains(&self, l: &Line, budget: Option<Budget>) -> Result<Decision> {
        self.same(&Pencil::of_line(l), budget)
    }
}

/// `τ_PQ`, the translation by `Q − P`.
pub fn translation_between(p: &Point, q: &Point) -> Result<Translation> {
    Ok(Translation { c: q.try_sub(p)? })
}

/// The dilatation fixing `v` and sending `q` to `r`, where `q`, `r` are apart
/// from `v` and collinear with it.
pub fn dilatation_fixing(v: &Point, q: &Point, r: &Point, budget: Option<Budget>) -> Result<Dilatation> {
    let dq = q.try_sub(v)?;
    let dr = r.try_sub(v)?;
    let Some(wq) = dq.apart_zero(budget)? else {
        return Err(Error::PointEqualsCenter);
    };
    let Some(wr) = dr.apart_zero(budget)? else {
        return Err(Error::PointEqualsCenter);
    };
    let axis_line = Line::with_witness(v.clone(), dq.clone(), wq.clone())?;
    // Collinearity is an equation, so the dyadic backend can only refute it;
    // an undecided check is taken on trust.
    if plane::on_line(r, &axis_line, budget)? == Decision::No {
        return Err(Error::NotCollinear);
    }
    let axis = wq.axis;
    let e = dr.coord(axis).try_mul(&dq.coord(axis).inv_witnessed(&wq.witness)?)?;
    // |e| ≥ |R − V|_w / |Q − V|_w on the witnessed axis of R − V.
    let bound = lower_bound(dr.coord(wr.axis), &wr.witness)
        / (dq.coord(wr.axis).abs_upper_bound() + BigRational::one());
    let e_witness = e.apart_zero_given_bound(&bound)?;
    let c = v.try_sub(&v.scale(&e)?)?;
    Ok(Dilatation { e, e_witness, c })
}

/// `join(P, σP)` when the two are apart.
pub fn trace_of(s: &Dilatation, p: &Point, budget: Option<Budget>) -> Result<Line> {
    match plane::join(p, &s.apply(p)?, budget) {
        Err(Error::PointsNotApart) => Err(Error::NoTraceAtP),
        other => other,
    }
}

/// The unique fixed point `(1 − e)⁻¹C`, given a witness that `e` is apart from 1.
pub fn fixed_point(s: &Dilatation, e_apart_one: &ApartWitness) -> Result<Point> {
    let one = s.e.one_like();
    if !s.e.verify_apart(&one, e_apart_one) {
        if s.e.exact_eq(&one) == Some(true) {
            return Err(Error::RatioIsOne);
        }
        return Err(Error::MissingWitness("ratio apart from one"));
    }
    let k = one.try_sub(&s.e)?;
    let bound = e_apart_one.lower_bound().cloned().unwrap_or_else(BigRational::one);
    let w = k.apart_zero_given_bound(&bound)?;
    s.c.scale(&k.inv_witnessed(&w)?)
}
