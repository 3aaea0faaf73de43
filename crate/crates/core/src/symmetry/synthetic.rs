//! Ruler-and-parallel constructions of translations and dilatations.
//!
//! Everything here goes through [`AffinePlane`], which offers joins,
//! parallels, intersections and the witnessed disjunctions, but no
//! coordinates. [`CoordinatePlane`] supplies those operations over a field;
//! coordinates are read back only in the `to_*` conversions at the end.

use crate::error::{Error, Result};
use crate::field::{race_apart_zero, Backend, Budget, FieldValue, Race};
use crate::plane::{self, Decision, Line, Point, Side};
use crate::symmetry::{Dilatation, Translation};

pub trait AffinePlane {
    type Point: Clone;
    type Line: Clone;

    fn join(&self, p: &Self::Point, q: &Self::Point) -> Result<Self::Line>;
    fn parallel_through(&self, p: &Self::Point, l: &Self::Line) -> Result<Self::Line>;
    /// Intersection of two lines, failing unless they are witnessed nonparallel.
    fn meet(&self, l: &Self::Line, m: &Self::Line) -> Result<Self::Point>;
    /// `Ok` when `p` is witnessed outside `l`.
    fn outside(&self, p: &Self::Point, l: &Self::Line) -> Result<()>;
    /// `Ok` when the points are witnessed apart.
    fn apart(&self, p: &Self::Point, q: &Self::Point) -> Result<()>;
    fn incident(&self, p: &Self::Point, l: &Self::Line) -> Result<Decision>;
    /// Which of two lines `p` lies outside, `l` tried first.
    fn outside_either(&self, p: &Self::Point, l: &Self::Line, m: &Self::Line) -> Result<Side>;
    /// Given `a ≠ b`, which of them `p` is apart from, `a` tried first.
    fn apart_either(&self, p: &Self::Point, a: &Self::Point, b: &Self::Point) -> Result<Side>;
    /// Three non-collinear points `O`, `E1`, `E2`.
    fn frame(&self) -> [Self::Point; 3];
}

/// The plane over a field with every query run at one budget.
#[derive(Clone, Copy, Debug)]
pub struct CoordinatePlane {
    pub backend: Backend,
    pub budget: Option<Budget>,
}

impl CoordinatePlane {
    pub fn new(backend: Backend) -> Self {
        CoordinatePlane { backend, budget: None }
    }

    pub fn with_budget(backend: Backend, budget: Option<Budget>) -> Self {
        CoordinatePlane { backend, budget }
    }
}

impl AffinePlane for CoordinatePlane {
    type Point = Point;
    type Line = Line;

    fn join(&self, p: &Point, q: &Point) -> Result<Line> {
        plane::join(p, q, self.budget)
    }

    fn parallel_through(&self, p: &Point, l: &Line) -> Result<Line> {
        plane::parallel_through(p, l)
    }

    fn meet(&self, l: &Line, m: &Line) -> Result<Point> {
        let w = plane::nonparallel(l, m, self.budget)?;
        plane::intersect(l, m, &w)
    }

    fn outside(&self, p: &Point, l: &Line) -> Result<()> {
        plane::outside(p, l, self.budget).map(|_| ())
    }

    fn apart(&self, p: &Point, q: &Point) -> Result<()> {
        match p.apart(q, self.budget)? {
            Some(_) => Ok(()),
            None => Err(Error::PointsNotApart),
        }
    }

    fn incident(&self, p: &Point, l: &Line) -> Result<Decision> {
        plane::on_line(p, l, self.budget)
    }

    fn outside_either(&self, p: &Point, l: &Line, m: &Line) -> Result<Side> {
        Ok(match plane::outside_either(p, l, m, self.budget)? {
            plane::BranchChoice::First(_) => Side::First,
            plane::BranchChoice::Second(_) => Side::Second,
        })
    }

    fn apart_either(&self, p: &Point, a: &Point, b: &Point) -> Result<Side> {
        let da = p.try_sub(a)?;
        let db = p.try_sub(b)?;
        let vals: [&FieldValue; 4] = [&da.x, &da.y, &db.x, &db.y];
        match race_apart_zero(&vals, self.budget)? {
            Race::Found(i, _) if i < 2 => Ok(Side::First),
            Race::Found(..) => Ok(Side::Second),
            Race::NoneApart => Err(Error::PointsNotApart),
            Race::Undecided(budget) => Err(Error::Undecided { budget }),
        }
    }

    fn frame(&self) -> [Point; 3] {
        let (o, e1, e2) = plane::canonical_frame(&self.backend);
        [o, e1, e2]
    }
}

/// Auxiliary-point candidates `O`, `E1`, `E2`, `E1+E2`, the last found as
/// the fourth vertex of the parallelogram on the frame.
pub fn candidates<A: AffinePlane>(plane: &A) -> Result<[A::Point; 4]> {
    let [o, e1, e2] = plane.frame();
    let through_e1 = plane.parallel_through(&e1, &plane.join(&o, &e2)?)?;
    let through_e2 = plane.parallel_through(&e2, &plane.join(&o, &e1)?)?;
    let e12 = plane.meet(&through_e1, &through_e2)?;
    Ok([o, e1, e2, e12])
}

/// First candidate passing `test`; `Undecided` if none passed and some ran
/// out of budget.
fn first_candidate<A, F>(plane: &A, test: F) -> Result<A::Point>
where
    A: AffinePlane,
    F: Fn(&A::Point) -> Result<()>,
{
    let mut undecided = None;
    let mut last = None;
    for c in candidates(plane)? {
        match test(&c) {
            Ok(()) => return Ok(c),
            Err(Error::Undecided { budget }) => undecided = Some(budget),
            Err(e) => last = Some(e),
        }
    }
    match (undecided, last) {
        (Some(budget), _) => Err(Error::Undecided { budget }),
        (None, Some(e)) => Err(e),
        (None, None) => unreachable!("four candidates"),
    }
}

/// `λ_PP'(Q)`: through `Q` draw the parallel to `P + P'`, through `P'` the
/// parallel to `P + Q`, and intersect.
pub fn partial_translation<A: AffinePlane>(plane: &A, p: &A::Point, p2: &A::Point, q: &A::Point) -> Result<A::Point> {
    let l = plane.join(p, p2)?;
    plane.outside(q, &l)?;
    let l_q = plane.parallel_through(q, &l)?;
    let m = plane.join(p, q)?;
    let m_p2 = plane.parallel_through(p2, &m)?;
    plane.meet(&l_q, &m_p2)
}

/// `λ_VPP'(Q)` for `P`, `P'` on a line through `V`: intersect `V + Q` with
/// the parallel to `P + Q` through `P'`.
pub fn partial_dilatation<A: AffinePlane>(
    plane: &A,
    v: &A::Point,
    p: &A::Point,
    p2: &A::Point,
    q: &A::Point,
) -> Result<A::Point> {
    plane.apart(p2, v).map_err(center_error)?;
    let l = plane.join(v, p).map_err(center_error)?;
    if plane.incident(p2, &l)? == Decision::No {
        return Err(Error::NotCollinear);
    }
    plane.outside(q, &l)?;
    let l_q = plane.join(v, q)?;
    let m = plane.join(p, q)?;
    let m_p2 = plane.parallel_through(p2, &m)?;
    plane.meet(&l_q, &m_p2)
}

fn center_error(e: Error) -> Error {
    match e {
        Error::PointsNotApart => Error::PointEqualsCenter,
        other => other,
    }
}

/// A translation assembled from two partial translations with parallel,
/// distinct exceptional lines.
#[derive(Clone, Debug)]
pub struct SyntheticTranslation<A: AffinePlane> {
    plane: A,
    p: A::Point,
    p_image: A::Point,
    l1: A::Line,
    p2: A::Point,
    p2_image: A::Point,
    l2: A::Line,
}

/// Builds the translation taking `p` to `p_image` (which must be apart).
/// The second base point is the first frame candidate outside `p + p_image`.
pub fn synthetic_translation<A: AffinePlane + Clone>(
    plane: &A,
    p: &A::Point,
    p_image: &A::Point,
) -> Result<SyntheticTranslation<A>> {
    let l1 = plane.join(p, p_image)?;
    let p2 = first_candidate(plane, |c| plane.outside(c, &l1))?;
    let p2_image = partial_translation(plane, p, p_image, &p2)?;
    let l2 = plane.join(&p2, &p2_image)?;
    Ok(SyntheticTranslation {
        plane: plane.clone(),
        p: p.clone(),
        p_image: p_image.clone(),
        l1,
        p2,
        p2_image,
        l2,
    })
}

impl<A: AffinePlane> SyntheticTranslation<A> {
    /// `λ₁Q` when `Q` is outside the first line, else `λ₂Q`.
    pub fn apply(&self, q: &A::Point) -> Result<A::Point> {
        match self.plane.outside_either(q, &self.l1, &self.l2)? {
            Side::First => partial_translation(&self.plane, &self.p, &self.p_image, q),
            Side::Second => partial_translation(&self.plane, &self.p2, &self.p2_image, q),
        }
    }

    pub fn second_base(&self) -> (&A::Point, &A::Point) {
        (&self.p2, &self.p2_image)
    }
}

impl SyntheticTranslation<CoordinatePlane> {
    /// Reads the offset off the image of the origin.
    pub fn to_translation(&self) -> Result<Translation> {
        let o = Point::origin(&self.plane.backend);
        Ok(Translation::new(self.apply(&o)?.try_sub(&o)?))
    }
}

/// A map on the plane punctured at a centre, supplied as a closure.
pub trait PuncturedMap<P> {
    fn apply(&self, q: &P) -> Result<P>;
}

impl<P, F: Fn(&P) -> Result<P>> PuncturedMap<P> for F {
    fn apply(&self, q: &P) -> Result<P> {
        self(q)
    }
}

/// Two partial dilatations about `V` glued along their common domain: a map
/// of the punctured plane.
#[derive(Clone, Debug)]
pub struct GluedPartialDilatation<A: AffinePlane> {
    plane: A,
    v: A::Point,
    p: A::Point,
    p_image: A::Point,
    l1: A::Line,
    p2: A::Point,
    p2_image: A::Point,
    l2: A::Line,
}

/// `λ₁ = λ_VPP'`, and `λ₂ = λ_{V P₂ P₂'}` with `P₂` the first frame candidate
/// outside `V + P` and `P₂' = λ₁P₂`.
pub fn glue_partial_dilatations<A: AffinePlane + Clone>(
    plane: &A,
    v: &A::Point,
    p: &A::Point,
    p_image: &A::Point,
) -> Result<GluedPartialDilatation<A>> {
    let l1 = plane.join(v, p).map_err(center_error)?;
    let p2 = first_candidate(plane, |c| plane.outside(c, &l1))?;
    let p2_image = partial_dilatation(plane, v, p, p_image, &p2)?;
    let l2 = plane.join(v, &p2)?;
    Ok(GluedPartialDilatation {
        plane: plane.clone(),
        v: v.clone(),
        p: p.clone(),
        p_image: p_image.clone(),
        l1,
        p2,
        p2_image,
        l2,
    })
}

impl<A: AffinePlane> GluedPartialDilatation<A> {
    pub fn center(&self) -> &A::Point {
        &self.v
    }
}

impl<A: AffinePlane> PuncturedMap<A::Point> for GluedPartialDilatation<A> {
    fn apply(&self, q: &A::Point) -> Result<A::Point> {
        // Q ≠ V and the two lines meet only at V, so Q is outside one of them.
        match self.plane.outside_either(q, &self.l1, &self.l2) {
            Ok(Side::First) => partial_dilatation(&self.plane, &self.v, &self.p, &self.p_image, q),
            Ok(Side::Second) => partial_dilatation(&self.plane, &self.v, &self.p2, &self.p2_image, q),
            Err(Error::PointsNotApart) => Err(Error::PointEqualsCenter),
            Err(e) => Err(e),
        }
    }
}

/// One of the two lines through `U` used to reach `V` and the points near it.
#[derive(Clone, Debug)]
struct Arm<P, L> {
    line: L,
    p1: P,
    p2: P,
    p1_image: P,
    p2_image: P,
}

/// A map of the punctured plane extended across its centre.
#[derive(Clone, Debug)]
pub struct Extension<A: AffinePlane, M> {
    plane: A,
    v: A::Point,
    u: A::Point,
    arms: [Arm<A::Point, A::Line>; 2],
    sigma0: M,
}

/// Extends `sigma0`, defined on points apart from `v`, to all points.
///
/// `U` is the first frame candidate apart from `V`. Through `U` run lines
/// parallel to the three sides of the frame triangle; the first two with `V`
/// outside become the arms. On each arm, `P₁ = U` and `P₂` is where the
/// parallel to the other arm through `V` crosses it.
pub fn extend_punctured<A, M>(plane: &A, v: &A::Point, sigma0: M) -> Result<Extension<A, M>>
where
    A: AffinePlane + Clone,
    M: PuncturedMap<A::Point>,
{
    let u = first_candidate(plane, |c| plane.apart(c, v))?;
    let [o, e1, e2] = plane.frame();
    let sides = [plane.join(&o, &e1)?, plane.join(&o, &e2)?, plane.join(&e1, &e2)?];
    let through_u = sides
        .iter()
        .map(|s| plane.parallel_through(&u, s))
        .collect::<Result<Vec<_>>>()?;
    // V ≠ U, so V is off all but at most one of three concurrent lines.
    let (first, second) = match plane.outside_either(v, &through_u[0], &through_u[1])? {
        Side::First => match plane.outside_either(v, &through_u[1], &through_u[2])? {
            Side::First => (0, 1),
            Side::Second => (0, 2),
        },
        Side::Second => match plane.outside_either(v, &through_u[0], &through_u[2])? {
            Side::First => (1, 0),
            Side::Second => (1, 2),
        },
    };
    let arm = |line: &A::Line, other: &A::Line| -> Result<Arm<A::Point, A::Line>> {
        let p2 = plane.meet(&plane.parallel_through(v, other)?, line)?;
        Ok(Arm {
            line: line.clone(),
            p1_image: sigma0.apply(&u)?,
            p2_image: sigma0.apply(&p2)?,
            p1: u.clone(),
            p2,
        })
    };
    let arms = [
        arm(&through_u[first], &through_u[second])?,
        arm(&through_u[second], &through_u[first])?,
    ];
    Ok(Extension {
        plane: plane.clone(),
        v: v.clone(),
        u,
        arms,
        sigma0,
    })
}

impl<A: AffinePlane, M: PuncturedMap<A::Point>> Extension<A, M> {
    /// Image of `q` by the parallel construction on the arm `q` is outside.
    fn through_arm(&self, q: &A::Point, arm: &Arm<A::Point, A::Line>) -> Result<A::Point> {
        let m = self.plane.join(&arm.p1, q)?;
        let n = self.plane.join(&arm.p2, q)?;
        let m_image = self.plane.parallel_through(&arm.p1_image, &m)?;
        let n_image = self.plane.parallel_through(&arm.p2_image, &n)?;
        self.plane.meet(&m_image, &n_image)
    }

    fn step3(&self, q: &A::Point) -> Result<A::Point> {
        match self.plane.outside_either(q, &self.arms[0].line, &self.arms[1].line)? {
            Side::First => self.through_arm(q, &self.arms[0]),
            Side::Second => self.through_arm(q, &self.arms[1]),
        }
    }

    /// `σ₀Q` when `Q ≠ V`, otherwise the arm construction. When both apply
    /// their results are compared, and a disagreement is reported.
    pub fn apply(&self, q: &A::Point) -> Result<A::Point> {
        match self.plane.apart_either(q, &self.v, &self.u)? {
            Side::First => {
                let direct = self.sigma0.apply(q)?;
                if self.plane.apart(q, &self.u).is_ok() {
                    let built = self.step3(q)?;
                    if self.plane.apart(&direct, &built).is_ok() {
                        return Err(Error::InconsistentPartialMap(
                            "punctured map disagrees with its parallel extension".into(),
                        ));
                    }
                }
                Ok(direct)
            }
            Side::Second => self.step3(q),
        }
    }

    pub fn auxiliary_point(&self) -> &A::Point {
        &self.u
    }
}

impl<M: PuncturedMap<Point>> Extension<CoordinatePlane, M> {
    /// Reads `C = σO` and `e` from `σE1 − C = (e, 0)`, checking that
    /// `σE2 − C = (0, e)`.
    pub fn to_dilatation(&self) -> Result<Dilatation> {
        let [o, e1, e2] = self.plane.frame();
        let c = self.apply(&o)?;
        let d1 = self.apply(&e1)?.try_sub(&c)?;
        let d2 = self.apply(&e2)?.try_sub(&c)?;
        let mismatch = [&d1.y, &d2.x, &d2.y.try_sub(&d1.x)?]
            .iter()
            .any(|v| matches!(v.apart_zero(self.plane.budget), Ok(crate::field::Apartness::Apart(_))));
        if mismatch {
            return Err(Error::InconsistentPartialMap("extension is not a dilatation".into()));
        }
        Dilatation::new(d1.x, c, self.plane.budget)
    }
}

/// The dilatation fixing `v` and taking `p` to `p_image`, built from two
/// partial dilatations and the punctured-plane extension.
pub fn synthetic_dilatation<A: AffinePlane + Clone>(
    plane: &A,
    v: &A::Point,
    p: &A::Point,
    p_image: &A::Point,
) -> Result<Extension<A, GluedPartialDilatation<A>>> {
    let glued = glue_partial_dilatations(plane, v, p, p_image)?;
    extend_punctured(plane, v, glued)
}
