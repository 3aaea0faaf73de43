//! Trace-preserving endomorphisms of the translation group.
//!
//! Over a field every such map is `τ_C ↦ τ_{xC}` for some `x`, so a
//! [`Scalar`] stores `x`. The inverse and the decomposition of a translation
//! are still computed by building dilatations and traces, then reading the
//! ratio back.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Apartness, Backend, Budget, FieldValue};
use crate::plane::{self, Decision, Point};
use crate::symmetry::{self, Dilatation, Translation};

#[derive(Clone, Debug)]
pub struct Scalar {
    x: FieldValue,
}

impl Scalar {
    pub fn new(x: FieldValue) -> Self {
        Scalar { x }
    }

    pub fn zero(backend: &Backend) -> Self {
        Scalar { x: backend.zero() }
    }

    pub fn one(backend: &Backend) -> Self {
        Scalar { x: backend.one() }
    }

    pub fn ratio(&self) -> &FieldValue {
        &self.x
    }

    /// `τ_C ↦ τ_{xC}`.
    pub fn apply(&self, t: &Translation) -> Result<Translation> {
        Ok(Translation::new(t.offset().scale(&self.x)?))
    }

    /// `τ^{α+β} = τ^α τ^β`.
    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        Ok(Scalar {
            x: self.x.try_add(&other.x)?,
        })
    }

    /// `τ^{αβ} = (τ^β)^α`.
    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        Ok(Scalar {
            x: self.x.try_mul(&other.x)?,
        })
    }

    /// The map sending each translation to its inverse, composed with `self`.
    pub fn neg(&self) -> Scalar {
        Scalar { x: -&self.x }
    }

    pub fn exact_eq(&self, other: &Scalar) -> Option<bool> {
        self.x.exact_eq(&other.x)
    }

    pub fn to_json(&self) -> serde_json::Value {
        self.x.to_json()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.x)
    }
}

/// `α_σ : τ ↦ στσ⁻¹`, read off by conjugating the unit translation along x.
pub fn from_dilatation(s: &Dilatation, budget: Option<Budget>) -> Result<Scalar> {
    let unit = Translation::new(Point::from_ints(&s.backend(), 1, 0));
    ratio_of(&unit, &s.conjugate(&unit)?, budget)
}

/// The unique `α` with `τ₂ = τ₁^α`, for `τ₁` not the identity and `τ₂`
/// in the same direction (possibly the identity).
pub fn ratio_of(t1: &Translation, t2: &Translation, budget: Option<Budget>) -> Result<Scalar> {
    let c1 = t1.offset();
    let c2 = t2.offset();
    let Some(w) = t1.apart_identity(budget)? else {
        return Err(Error::BaseIsIdentity);
    };
    let x = c2.coord(w.axis).try_mul(&c1.coord(w.axis).inv_witnessed(&w.witness)?)?;
    // C₂ = xC₁ on the other coordinate as well, i.e. the offsets are parallel.
    match c1.cross(c2)?.apart_zero(budget)? {
        Apartness::NotApart | Apartness::Undecided(_) => Ok(Scalar { x }),
        Apartness::Apart(_) => Err(Error::DirectionsDiffer),
    }
}

/// The inverse scalar via the dilatation fixing `p` with `σQ = τ_PQ^α P`.
///
/// `σ` is sampled at `P + (1,0)` and `P + (0,1)`; the first sample fixes it,
/// the second must agree. Then `α⁻¹ = α_{σ⁻¹}`.
pub fn inverse(a: &Scalar, p: &Point, budget: Option<Budget>) -> Result<Scalar> {
    match a.x.apart_zero(budget)? {
        Apartness::Apart(_) => {}
        Apartness::NotApart => return Err(Error::ScalarZero),
        Apartness::Undecided(budget) => return Err(Error::Undecided { budget }),
    }
    let backend = p.backend();
    let sigma_at = |q: &Point| -> Result<Point> {
        let t = symmetry::translation_between(p, q)?;
        a.apply(&t)?.apply(p)
    };
    let q1 = p.try_add(&Point::from_ints(&backend, 1, 0))?;
    let q2 = p.try_add(&Point::from_ints(&backend, 0, 1))?;
    let sigma = symmetry::dilatation_fixing(p, &q1, &sigma_at(&q1)?, budget)?;
    let probe = sigma.apply(&q2)?;
    if matches!(probe.apart(&sigma_at(&q2)?, budget), Ok(Some(_))) {
        return Err(Error::InconsistentPartialMap("scalar does not act as a dilatation".into()));
    }
    from_dilatation(&sigma.inverse()?, budget)
}

/// `(α, β)` with `τ = τ₁^α τ₂^β`, found by intersecting the `τ₂`-trace
/// through `P = O` with the `τ₁`-trace through `Q = τP`.
pub fn decompose(
    t: &Translation,
    t1: &Translation,
    t2: &Translation,
    budget: Option<Budget>,
) -> Result<(Scalar, Scalar)> {
    let d1 = t1.direction(budget)?;
    let d2 = t2.direction(budget)?;
    if d1.same(&d2, budget)? == Decision::Yes {
        return Err(Error::SameDirection);
    }
    let p = Point::origin(&t.offset().backend());
    let q = t.apply(&p)?;
    let l2 = symmetry::trace_of(&t2.to_dilatation(), &p, budget)?;
    let l1 = symmetry::trace_of(&t1.to_dilatation(), &q, budget)?;
    let w = match plane::nonparallel(&l1, &l2, budget) {
        Err(Error::Parallel) => return Err(Error::SameDirection),
        other => other?,
    };
    let r = plane::intersect(&l1, &l2, &w)?;
    let alpha = ratio_of(t1, &symmetry::translation_between(&r, &q)?, budget)?;
    let beta = ratio_of(t2, &symmetry::translation_between(&p, &r)?, budget)?;
    Ok((alpha, beta))
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommutativityReport {
    pub pairs: usize,
    /// Index pairs whose products act differently.
    pub violations: Vec<(usize, usize)>,
    pub undecided: usize,
}

impl CommutativityReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares `(τ^β)^α` with `(τ^α)^β` on the unit translation for every pair.
pub fn commutativity_check(samples: &[Scalar], budget: Option<Budget>) -> Result<CommutativityReport> {
    let mut report = CommutativityReport::default();
    let Some(first) = samples.first() else {
        return Ok(report);
    };
    let unit = Translation::new(Point::from_ints(&first.x.backend(), 1, 0));
    for (i, a) in samples.iter().enumerate() {
        for (j, b) in samples.iter().enumerate() {
            report.pairs += 1;
            let ab = a.apply(&b.apply(&unit)?)?;
            let ba = b.apply(&a.apply(&unit)?)?;
            match ab.offset().apart(ba.offset(), budget) {
                Ok(Some(_)) => report.violations.push((i, j)),
                Ok(None) => {}
                Err(Error::Undecided { .. }) => report.undecided += 1,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn pt(b: &Backend, x: i64, y: i64) -> Point {
        Point::from_ints(b, x, y)
    }

    fn tr(b: &Backend, x: i64, y: i64) -> Translation {
        Translation::new(pt(b, x, y))
    }

    fn s(b: &Backend, x: i64) -> Scalar {
        Scalar::new(b.int(x))
    }

    fn is(a: &Scalar, v: &FieldValue) -> bool {
        a.ratio().exact_eq(v) == Some(true)
    }

    #[test]
    fn action_on_translations() {
        let b = Backend::Rational;
        let t = tr(&b, 2, -3);
        assert_eq!(Scalar::one(&b).apply(&t).unwrap().exact_eq(&t), Some(true));
        assert_eq!(Scalar::zero(&b).apply(&t).unwrap().is_identity(None).unwrap(), Decision::Yes);
        let minus = s(&b, 1).add(&s(&b, 1).neg()).unwrap();
        assert!(is(&minus, &b.zero()));
        assert_eq!(s(&b, -1).apply(&t).unwrap().exact_eq(&t.inverse()), Some(true));
    }

    #[test]
    fn ring_operations() {
        let b = Backend::Rational;
        let a = s(&b, 3);
        assert!(is(&a.add(&Scalar::zero(&b)).unwrap(), &b.int(3)));
        assert!(is(&a.mul(&Scalar::one(&b)).unwrap(), &b.int(3)));
        assert!(is(&Scalar::zero(&b).mul(&a).unwrap(), &b.zero()));
        let t = tr(&b, 1, 4);
        let sum = a.add(&s(&b, 5)).unwrap().apply(&t).unwrap();
        let split = a.apply(&t).unwrap().compose(&s(&b, 5).apply(&t).unwrap()).unwrap();
        assert_eq!(sum.exact_eq(&split), Some(true));
    }

    #[test]
    fn dilatation_scalars() {
        let b = Backend::Rational;
        assert!(is(&from_dilatation(&Dilatation::identity(&b), None).unwrap(), &b.one()));
        let d = Dilatation::new(b.int(2), pt(&b, 7, 3), None).unwrap();
        assert!(is(&from_dilatation(&d, None).unwrap(), &b.int(2)));
    }

    #[test]
    fn inverses() {
        let b = Backend::Rational;
        let o = pt(&b, 0, 0);
        assert!(is(&inverse(&Scalar::one(&b), &o, None).unwrap(), &b.one()));
        let half = FieldValue::Rational(BigRational::new(1.into(), 2.into()));
        assert!(is(&inverse(&s(&b, 2), &pt(&b, 4, -1), None).unwrap(), &half));
        assert!(matches!(inverse(&Scalar::zero(&b), &o, None), Err(Error::ScalarZero)));
        let g = Backend::Gf(5);
        for x in 1..5 {
            let inv = inverse(&s(&g, x), &pt(&g, 0, 0), None).unwrap();
            assert!(is(&inv.mul(&s(&g, x)).unwrap(), &g.one()));
        }
    }

    #[test]
    fn ratios() {
        let b = Backend::Rational;
        let t1 = tr(&b, 2, 4);
        assert!(is(&ratio_of(&t1, &t1, None).unwrap(), &b.one()));
        assert!(is(&ratio_of(&t1, &Translation::identity(&b), None).unwrap(), &b.zero()));
        let three_halves = FieldValue::Rational(BigRational::new(3.into(), 2.into()));
        assert!(is(&ratio_of(&t1, &tr(&b, 3, 6), None).unwrap(), &three_halves));
        assert!(matches!(ratio_of(&t1, &tr(&b, 3, 7), None), Err(Error::DirectionsDiffer)));
        assert!(matches!(
            ratio_of(&Translation::identity(&b), &t1, None),
            Err(Error::BaseIsIdentity)
        ));
    }

    #[test]
    fn decompositions() {
        let b = Backend::Rational;
        let (t1, t2) = (tr(&b, 1, 0), tr(&b, 0, 1));
        let (a, c) = decompose(&Translation::identity(&b), &t1, &t2, None).unwrap();
        assert!(is(&a, &b.zero()) && is(&c, &b.zero()));
        let (a, c) = decompose(&tr(&b, 3, 5), &t1, &t2, None).unwrap();
        assert!(is(&a, &b.int(3)) && is(&c, &b.int(5)));
        assert!(matches!(decompose(&tr(&b, 3, 5), &t1, &tr(&b, 2, 0), None), Err(Error::SameDirection)));
    }

    #[test]
    fn gf3_decompositions_unique() {
        let g = Backend::Gf(3);
        let (t1, t2) = (tr(&g, 1, 1), tr(&g, 0, 1));
        let mut seen = std::collections::HashSet::new();
        for x in 0..3 {
            for y in 0..3 {
                let t = tr(&g, x, y);
                let (a, c) = decompose(&t, &t1, &t2, None).unwrap();
                let back = a.apply(&t1).unwrap().compose(&c.apply(&t2).unwrap()).unwrap();
                assert_eq!(back.exact_eq(&t), Some(true));
                assert!(seen.insert((a.ratio().key(), c.ratio().key())));
            }
        }
    }

    #[test]
    fn commutativity() {
        let g = Backend::Gf(3);
        let all: Vec<_> = (0..3).map(|x| s(&g, x)).collect();
        let r = commutativity_check(&all, None).unwrap();
        assert_eq!(r.pairs, 9);
        assert!(r.holds());
    }
}
