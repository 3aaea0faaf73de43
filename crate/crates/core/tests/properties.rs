use desargues::coordinatize::{coords, point_at, Frame};
use desargues::field::{Apartness, Backend, CotransChoice, FieldValue};
use desargues::plane::{self, Decision, Point};
use desargues::scalars::Scalar;
use desargues::symmetry::synthetic::{synthetic_translation, CoordinatePlane};
use desargues::symmetry::{translation_between, Dilatation, Translation};
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = FieldValue> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| FieldValue::rational(n, d))
}

fn gf7() -> impl Strategy<Value = FieldValue> {
    (0i64..7).prop_map(|n| Backend::Gf(7).int(n))
}

fn value() -> impl Strategy<Value = FieldValue> {
    prop_oneof![rational(), gf7()]
}

fn triple() -> impl Strategy<Value = (FieldValue, FieldValue, FieldValue)> {
    prop_oneof![(rational(), rational(), rational()), (gf7(), gf7(), gf7())]
}

fn point() -> impl Strategy<Value = Point> {
    (rational(), rational()).prop_map(|(x, y)| Point::new(x, y).unwrap())
}

fn eq(a: &FieldValue, b: &FieldValue) -> bool {
    a.exact_eq(b) == Some(true)
}

fn same(a: &Point, b: &Point) -> bool {
    a.exact_eq(b) == Some(true)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_laws((a, b, c) in triple()) {
        prop_assert!(eq(&(&(&a + &b) + &c), &(&a + &(&b + &c))));
        prop_assert!(eq(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c))));
        prop_assert!(eq(&(&a * &b), &(&b * &a)));
        prop_assert!(eq(&(&(&a - &b) + &b), &a));
        if a.is_zero_exact() == Some(false) {
            prop_assert!(eq(&(&a * &a.inv(None).unwrap()), &a.one_like()));
        }
    }

    #[test]
    fn apartness_is_irreflexive_and_symmetric(a in value(), b in value()) {
        prop_assume!(a.same_kind(&b).is_ok());
        prop_assert!(!a.apart(&a, None).unwrap().is_apart());
        prop_assert_eq!(a.apart(&b, None).unwrap().is_apart(), b.apart(&a, None).unwrap().is_apart());
        prop_assert_eq!(a.apart(&b, None).unwrap().is_apart(), a.exact_eq(&b) == Some(false));
    }

    #[test]
    fn cotransitivity_picks_a_verified_side(
        (x, y) in (-40i64..40, -40i64..40),
        z in -40i64..40,
        budget in 8u32..40,
    ) {
        prop_assume!(x != y);
        let b = Backend::Dyadic { default_budget: budget };
        let r = |n: i64| b.from_rational(&BigRational::new(n.into(), 8.into())).unwrap();
        let (x, y, z) = (r(x), r(y), r(z));
        let Apartness::Apart(w) = x.apart(&y, None).unwrap() else {
            panic!("distinct eighths are apart at budget {budget}");
        };
        match FieldValue::cotrans(&x, &y, &z, &w).unwrap() {
            CotransChoice::FirstApart(w) => prop_assert!(z.verify_apart(&x, &w)),
            CotransChoice::SecondApart(w) => prop_assert!(z.verify_apart(&y, &w)),
        }
    }

    #[test]
    fn join_contains_both_points(p in point(), q in point()) {
        prop_assume!(p.exact_eq(&q) == Some(false));
        let l = plane::join(&p, &q, None).unwrap();
        prop_assert_eq!(plane::on_line(&p, &l, None).unwrap(), Decision::Yes);
        prop_assert_eq!(plane::on_line(&q, &l, None).unwrap(), Decision::Yes);
        prop_assert_eq!(plane::lines_equal(&l, &plane::join(&q, &p, None).unwrap(), None).unwrap(), Decision::Yes);
    }

    #[test]
    fn intersection_lies_on_both_lines(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(a.exact_eq(&b) == Some(false) && c.exact_eq(&d) == Some(false));
        let (l, m) = (plane::join(&a, &b, None).unwrap(), plane::join(&c, &d, None).unwrap());
        match plane::nonparallel(&l, &m, None) {
            Ok(w) => {
                prop_assert!(plane::verify_nonparallel(&l, &m, &w));
                let x = plane::intersect(&l, &m, &w).unwrap();
                prop_assert_eq!(plane::on_line(&x, &l, None).unwrap(), Decision::Yes);
                prop_assert_eq!(plane::on_line(&x, &m, None).unwrap(), Decision::Yes);
            }
            Err(_) => prop_assert_eq!(plane::is_parallel(&l, &m, None).unwrap(), Decision::Yes),
        }
    }

    #[test]
    fn parallel_through_a_point(p in point(), a in point(), b in point()) {
        prop_assume!(a.exact_eq(&b) == Some(false));
        let l = plane::join(&a, &b, None).unwrap();
        let m = plane::parallel_through(&p, &l).unwrap();
        prop_assert_eq!(plane::is_parallel(&l, &m, None).unwrap(), Decision::Yes);
        prop_assert_eq!(plane::on_line(&p, &m, None).unwrap(), Decision::Yes);
        match plane::outside(&p, &l, None) {
            Ok(w) => prop_assert!(plane::verify_outside(&p, &l, &w)),
            Err(_) => prop_assert_eq!(plane::lines_equal(&l, &m, None).unwrap(), Decision::Yes),
        }
    }

    #[test]
    fn dilatations_form_a_group(e in rational(), f in rational(), c in point(), d in point(), x in point()) {
        prop_assume!(e.is_zero_exact() == Some(false) && f.is_zero_exact() == Some(false));
        let s = Dilatation::new(e, c, None).unwrap();
        let t = Dilatation::new(f, d, None).unwrap();
        let st = s.compose(&t).unwrap();
        prop_assert!(same(&st.apply(&x).unwrap(), &s.apply(&t.apply(&x).unwrap()).unwrap()));
        let back = s.inverse().unwrap().apply(&s.apply(&x).unwrap()).unwrap();
        prop_assert!(same(&back, &x));
    }

    #[test]
    fn translations_commute(a in point(), b in point(), x in point()) {
        let (s, t) = (Translation::new(a), Translation::new(b));
        let st = s.compose(&t).unwrap();
        prop_assert!(st.exact_eq(&t.compose(&s).unwrap()) == Some(true));
        prop_assert!(same(&st.apply(&x).unwrap(), &s.apply(&t.apply(&x).unwrap()).unwrap()));
    }

    #[test]
    fn synthetic_translation_agrees_with_coordinates(p in point(), q in point(), x in point()) {
        prop_assume!(p.exact_eq(&q) == Some(false));
        let cp = CoordinatePlane::new(Backend::Rational);
        let tau = synthetic_translation(&cp, &p, &q).unwrap();
        let closed = translation_between(&p, &q).unwrap();
        prop_assert!(same(&tau.apply(&x).unwrap(), &closed.apply(&x).unwrap()));
    }

    #[test]
    fn scalars_distribute_over_translations(a in rational(), b in rational(), u in point(), v in point()) {
        let (a, b) = (Scalar::new(a), Scalar::new(b));
        let (s, t) = (Translation::new(u), Translation::new(v));
        let lhs = a.apply(&s.compose(&t).unwrap()).unwrap();
        let rhs = a.apply(&s).unwrap().compose(&a.apply(&t).unwrap()).unwrap();
        prop_assert!(lhs.exact_eq(&rhs) == Some(true));
        let sum = a.add(&b).unwrap().apply(&s).unwrap();
        prop_assert!(sum.exact_eq(&a.apply(&s).unwrap().compose(&b.apply(&s).unwrap()).unwrap()) == Some(true));
    }

    #[test]
    fn coordinates_round_trip(o in point(), u in point(), v in point(), x in point()) {
        let frame = Frame::new(o, Translation::new(u), Translation::new(v), None);
        prop_assume!(frame.is_ok());
        let frame = frame.unwrap();
        let (cx, cy) = coords(&frame, &x, None).unwrap();
        prop_assert!(same(&point_at(&frame, &cx, &cy).unwrap(), &x));
    }
}
