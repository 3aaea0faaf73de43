//! Three equivalent ways of saying a point is off a line in the real plane:
//! (a) it lies outside the line, (b′) its squared distance to the line is
//! apart from 0, (c) it does not satisfy the line's equation.

use serde::Serialize;

use crate::coordinatize::{line_equation, Frame};
use crate::error::{Error, Result};
use crate::field::{Apartness, Backend, Budget, FieldValue};
use crate::plane::{self, Line, Point};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ConditionStatus {
    Positive { witness: String },
    Fails,
    Undecided { budget: u32 },
}

impl ConditionStatus {
    fn of(a: Apartness) -> Self {
        match a {
            Apartness::Apart(w) => ConditionStatus::Positive { witness: w.to_string() },
            Apartness::NotApart => ConditionStatus::Fails,
            Apartness::Undecided(budget) => ConditionStatus::Undecided { budget },
        }
    }

    fn kind(&self) -> u8 {
        match self {
            ConditionStatus::Positive { .. } => 0,
            ConditionStatus::Fails => 1,
            ConditionStatus::Undecided { .. } => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Real1Report {
    pub outside: ConditionStatus,
    pub squared_distance: ConditionStatus,
    pub equation: ConditionStatus,
    /// `ρ² = (a·x₀ + b·y₀ + c)² / (a² + b²)`.
    pub rho_squared: String,
    /// All three conditions came out the same way.
    pub agree: bool,
}

pub fn real1_check(p: &Point, l: &Line, budget: Option<Budget>) -> Result<Real1Report> {
    p.same_kind(l.base())?;
    if let Backend::Gf(q) = p.backend() {
        return Err(Error::Unsupported(format!("distances need an ordered field, not GF({q})")));
    }
    let outside = match plane::outside(p, l, budget) {
        Ok(w) => ConditionStatus::Positive {
            witness: w.witness.to_string(),
        },
        Err(Error::NotOutside) => ConditionStatus::Fails,
        Err(Error::Undecided { budget }) => ConditionStatus::Undecided { budget },
        Err(e) => return Err(e),
    };
    let frame = Frame::canonical(&p.backend());
    let (a, b, c) = line_equation(&frame, l, budget)?;
    let v = a.try_mul(&p.x)?.try_add(&b.try_mul(&p.y)?)?.try_add(&c)?;
    let equation = ConditionStatus::of(v.apart_zero(budget)?);
    // One of a, b is 1, so a² + b² ≥ 1.
    let norm = a.try_mul(&a)?.try_add(&b.try_mul(&b)?)?;
    let w = norm.apart_zero_given_bound(&num_rational::BigRational::from_integer(1.into()))?;
    let rho2: FieldValue = v.try_mul(&v)?.try_mul(&norm.inv_witnessed(&w)?)?;
    let squared_distance = ConditionStatus::of(rho2.apart_zero(budget)?);
    let agree = outside.kind() == equation.kind() && equation.kind() == squared_distance.kind();
    Ok(Real1Report {
        outside,
        squared_distance,
        equation,
        rho_squared: rho2.to_string(),
        agree,
    })
}
