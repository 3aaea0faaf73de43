//! Coordinates relative to an origin and two translations.
//!
//! `P` has coordinates `(x, y)` when `τ_OP = τ₁ˣ τ₂ʸ`. Lines become
//! parameter sets `{(α + tγ, β + tδ)}` and equations `ax + by + c = 0`.

use crate::error::{Error, Result};
use crate::field::{race_apart_zero, ApartWitness, Backend, Budget, FieldError, FieldValue, Race};
use crate::plane::{Line, Point, PointApart};
use crate::scalars::{self, Scalar};
use crate::symmetry::{translation_between, Translation};

#[derive(Clone, Debug)]
pub struct Frame {
    origin: Point,
    t1: Translation,
    t2: Translation,
    det_witness: ApartWitness,
}

impl Frame {
    pub fn new(origin: Point, t1: Translation, t2: Translation, budget: Option<Budget>) -> Result<Self> {
        origin.same_kind(t1.offset())?;
        origin.same_kind(t2.offset())?;
        let det = t1.offset().cross(t2.offset())?;
        match det.apart_zero(budget)? {
            crate::field::Apartness::Apart(det_witness) => Ok(Frame {
                origin,
                t1,
                t2,
                det_witness,
            }),
            crate::field::Apartness::NotApart => Err(Error::InvalidFrame("translations are not independent")),
            crate::field::Apartness::Undecided(budget) => Err(Error::Undecided { budget }),
        }
    }

    /// `O = (0,0)`, `τ₁ = τ_(1,0)`, `τ₂ = τ_(0,1)`.
    pub fn canonical(backend: &Backend) -> Self {
        Frame::new(
            Point::origin(backend),
            Translation::new(Point::from_ints(backend, 1, 0)),
            Translation::new(Point::from_ints(backend, 0, 1)),
            None,
        )
        .expect("unit translations are independent")
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    pub fn t1(&self) -> &Translation {
        &self.t1
    }

    pub fn t2(&self) -> &Translation {
        &self.t2
    }

    pub fn det_witness(&self) -> &ApartWitness {
        &self.det_witness
    }

    pub fn backend(&self) -> Backend {
        self.origin.backend()
    }

    /// `{"O": point, "t1": offset, "t2": offset}`.
    pub fn from_json(backend: &Backend, v: &serde_json::Value, budget: Option<Budget>) -> Result<Self> {
        let get = |k: &str| {
            v.get(k)
                .ok_or_else(|| Error::Field(FieldError::Parse(format!("frame is missing {k:?}"))))
                .and_then(|p| Point::from_json(backend, p))
        };
        Frame::new(
            get("O")?,
            Translation::new(get("t1")?),
            Translation::new(get("t2")?),
            budget,
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "O": self.origin.to_json(),
            "t1": self.t1.offset().to_json(),
            "t2": self.t2.offset().to_json(),
        })
    }
}

/// `(x, y)` with `τ_OP = τ₁ˣ τ₂ʸ`.
pub fn coords(frame: &Frame, p: &Point, budget: Option<Budget>) -> Result<(FieldValue, FieldValue)> {
    let t = translation_between(&frame.origin, p)?;
    let (a, b) = scalars::decompose(&t, &frame.t1, &frame.t2, budget)?;
    Ok((a.ratio().clone(), b.ratio().clone()))
}

/// `τ₁ˣ τ₂ʸ O`.
pub fn point_at(frame: &Frame, x: &FieldValue, y: &FieldValue) -> Result<Point> {
    let t = combine(frame, x, y)?;
    t.apply(&frame.origin)
}

fn combine(frame: &Frame, x: &FieldValue, y: &FieldValue) -> Result<Translation> {
    let a = Scalar::new(x.clone()).apply(&frame.t1)?;
    let b = Scalar::new(y.clone()).apply(&frame.t2)?;
    a.compose(&b)
}

/// A line as `{(α + tγ, β + tδ) : t}` in frame coordinates.
#[derive(Clone, Debug)]
pub struct LineParams {
    pub alpha: FieldValue,
    pub beta: FieldValue,
    pub gamma: FieldValue,
    pub delta: FieldValue,
    /// Which of `γ`, `δ` is apart from zero.
    pub witness: PointApart,
}

impl LineParams {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "alpha": self.alpha.to_json(),
            "beta": self.beta.to_json(),
            "gamma": self.gamma.to_json(),
            "delta": self.delta.to_json(),
        })
    }

    /// Point of parameter `t`, in frame coordinates.
    pub fn at(&self, t: &FieldValue) -> Result<(FieldValue, FieldValue)> {
        Ok((
            self.alpha.try_add(&t.try_mul(&self.gamma)?)?,
            self.beta.try_add(&t.try_mul(&self.delta)?)?,
        ))
    }
}

pub fn line_params(frame: &Frame, l: &Line, budget: Option<Budget>) -> Result<LineParams> {
    let (alpha, beta) = coords(frame, l.base(), budget)?;
    let (g, d) = scalars::decompose(&Translation::new(l.dir().clone()), &frame.t1, &frame.t2, budget)?;
    let (gamma, delta) = (g.ratio().clone(), d.ratio().clone());
    let witness = Point::new(gamma.clone(), delta.clone())?
        .apart_zero(budget)?
        .ok_or(Error::ZeroDirection)?;
    Ok(LineParams {
        alpha,
        beta,
        gamma,
        delta,
        witness,
    })
}

pub fn line_from_params(frame: &Frame, params: &LineParams) -> Result<Line> {
    let base = point_at(frame, &params.alpha, &params.beta)?;
    let dir = combine(frame, &params.gamma, &params.delta)?.offset().clone();
    // Independence of τ₁, τ₂ keeps the direction nonzero; search for the
    // coordinate that shows it.
    let witness = dir.apart_zero(None)?.ok_or(Error::ZeroDirection)?;
    Line::with_witness(base, dir, witness)
}

/// `(a, b, c)` with the points of `l` exactly those satisfying
/// `ax + by + c = 0`, scaled so the first of `a`, `b` found apart from 0 is 1.
pub fn line_equation(
    frame: &Frame,
    l: &Line,
    budget: Option<Budget>,
) -> Result<(FieldValue, FieldValue, FieldValue)> {
    let p = line_params(frame, l, budget)?;
    let a = p.delta.clone();
    let b = -&p.gamma;
    let c = p.gamma.try_mul(&p.beta)? - p.delta.try_mul(&p.alpha)?;
    let (lead, w) = match race_apart_zero(&[&a, &b], budget)? {
        Race::Found(0, w) => (&a, w),
        Race::Found(_, w) => (&b, w),
        Race::NoneApart => return Err(Error::ZeroDirection),
        Race::Undecided(budget) => return Err(Error::Undecided { budget }),
    };
    let k = lead.inv_witnessed(&w)?;
    Ok((&a * &k, &b * &k, &c * &k))
}
