//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Every comparison is exact. Oracles below use closed-form coordinates and
//! never call the constructions they check.

use std::time::Instant;

use desargues::configcheck::{self, real1_check, DemoOutcome, Mode, Sampler, Status};
use desargues::coordinatize::{coords, line_from_params, line_params, point_at, Frame};
use desargues::field::{Backend, FieldValue};
use desargues::plane::{self, Decision, FinitePlane, Line, Point};
use desargues::scalars::{self, Scalar};
use desargues::symmetry::synthetic::{
    extend_punctured, partial_dilatation, partial_translation, synthetic_dilatation, synthetic_translation,
    CoordinatePlane,
};
use desargues::symmetry::{Dilatation, Translation};
use num_rational::BigRational;

const RANDOM_CASES: usize = 1000;
const SEED: u64 = 20240601;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn same(a: &Point, b: &Point) -> bool {
    a.exact_eq(b) == Some(true)
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn rat(v: &FieldValue) -> BigRational {
    v.as_rational().cloned().expect("rational backend")
}

// Closed-form oracles, written against coordinates only.

fn oracle_translate(p: &Point, p2: &Point, x: &Point) -> Point {
    Point::new(&x.x + &(&p2.x - &p.x), &x.y + &(&p2.y - &p.y)).unwrap()
}

/// `e` with `P′ − V = e(P − V)`, from whichever coordinate of `P − V` is nonzero.
fn oracle_ratio(v: &Point, p: &Point, p2: &Point) -> FieldValue {
    let (dx, dy) = (&p.x - &v.x, &p.y - &v.y);
    if dx.is_zero_exact() == Some(false) {
        &(&p2.x - &v.x) * &dx.inv(None).unwrap()
    } else {
        &(&p2.y - &v.y) * &dy.inv(None).unwrap()
    }
}

fn oracle_dilate(v: &Point, e: &FieldValue, x: &Point) -> Point {
    Point::new(&v.x + &(e * &(&x.x - &v.x)), &v.y + &(e * &(&x.y - &v.y))).unwrap()
}

fn collinear(a: &Point, b: &Point, c: &Point) -> bool {
    let v = &(&(&b.x - &a.x) * &(&c.y - &a.y)) - &(&(&b.y - &a.y) * &(&c.x - &a.x));
    v.is_zero_exact() == Some(true)
}

fn distinct(a: &Point, b: &Point) -> bool {
    a.exact_eq(b) == Some(false)
}

fn criterion_1() -> Outcome {
    let mut details = Vec::new();
    for p in [2u64, 3] {
        let r = configcheck::verify_axioms(&Backend::Gf(p), Mode::Exhaustive).map_err(|e| e.to_string())?;
        ensure(r.status() == Status::Pass, || format!("gf:{p}\n{}", r.to_text()))?;
        for id in ["G1", "G2", "G3", "L1", "L2", "K1", "K2"] {
            let t = &r.checks[id];
            ensure(t.failed == 0 && t.passed > 0, || format!("gf:{p} {id}: {t:?}"))?;
        }
        let expected = format!(
            "{} points, {} lines, {} pencils, {p} points per line",
            p * p,
            p * p + p,
            p + 1
        );
        ensure(r.checks["counts"].detail == expected, || {
            format!("gf:{p} counts: {}", r.checks["counts"].detail)
        })?;
        details.push(format!("gf:{p} {expected}"));
    }
    Ok(details.join("; "))
}

fn criterion_2() -> Outcome {
    let mut details = Vec::new();
    let r = configcheck::verify_configurations(&Backend::Gf(3), Mode::Exhaustive).map_err(|e| e.to_string())?;
    let r5 = configcheck::verify_configurations(&Backend::Gf(5), Mode::Random { seed: SEED, n: 600 })
        .map_err(|e| e.to_string())?;
    for (name, r) in [("gf:3 exhaustive", &r), ("gf:5 sampled", &r5)] {
        ensure(r.status() == Status::Pass, || format!("{name}\n{}", r.to_text()))?;
        for id in ["D1", "D2", "P"] {
            let t = &r.checks[id];
            ensure(t.failed == 0 && t.undecided == 0 && t.passed > 0, || format!("{name} {id}: {t:?}"))?;
        }
        details.push(format!(
            "{name}: D1 {} / D2 {} / P {} hold",
            r.checks["D1"].passed, r.checks["D2"].passed, r.checks["P"].passed
        ));
    }
    Ok(details.join("; "))
}

fn synthetic_finite(p: u64) -> Result<usize, String> {
    let fp = FinitePlane::new(Backend::Gf(p)).unwrap();
    let cp = CoordinatePlane::new(fp.backend);
    let pts = &fp.points;
    let mut n = 0;
    for a in pts {
        for a2 in pts.iter().filter(|x| distinct(x, a)) {
            for q in pts.iter().filter(|q| !collinear(a, a2, q)) {
                let got = partial_translation(&cp, a, a2, q).map_err(|e| e.to_string())?;
                ensure(same(&got, &oracle_translate(a, a2, q)), || format!("λ {a}->{a2} at {q}"))?;
                n += 1;
            }
            let tau = synthetic_translation(&cp, a, a2).map_err(|e| e.to_string())?;
            for x in pts {
                ensure(same(&tau.apply(x).map_err(|e| e.to_string())?, &oracle_translate(a, a2, x)), || {
                    format!("τ {a}->{a2} at {x}")
                })?;
                n += 1;
            }
        }
    }
    for v in pts {
        for a in pts.iter().filter(|x| distinct(x, v)) {
            for a2 in pts.iter().filter(|x| distinct(x, v) && collinear(v, a, x)) {
                let e = oracle_ratio(v, a, a2);
                for q in pts.iter().filter(|q| !collinear(v, a, q)) {
                    let got = partial_dilatation(&cp, v, a, a2, q).map_err(|e| e.to_string())?;
                    ensure(same(&got, &oracle_dilate(v, &e, q)), || format!("λ_V {v} {a}->{a2} at {q}"))?;
                    n += 1;
                }
                let sigma = synthetic_dilatation(&cp, v, a, a2).map_err(|e| e.to_string())?;
                for x in pts {
                    let got = sigma.apply(x).map_err(|e| e.to_string())?;
                    ensure(same(&got, &oracle_dilate(v, &e, x)), || format!("σ {v} {a}->{a2} at {x}"))?;
                    n += 1;
                }
            }
        }
    }
    // Extension of a punctured map given only off the centre.
    for v in pts {
        for e in fp.backend.elements().unwrap().iter().filter(|e| e.is_zero_exact() == Some(false)) {
            let (v0, e0) = (v.clone(), e.clone());
            let punctured = move |q: &Point| -> desargues::Result<Point> {
                if q.exact_eq(&v0) == Some(true) {
                    return Err(desargues::Error::PointEqualsCenter);
                }
                Ok(oracle_dilate(&v0, &e0, q))
            };
            let ext = extend_punctured(&cp, v, punctured).map_err(|e| e.to_string())?;
            for x in pts {
                let got = ext.apply(x).map_err(|e| e.to_string())?;
                ensure(same(&got, &oracle_dilate(v, e, x)), || format!("extension at {v}, e={e}, {x}"))?;
                n += 1;
            }
        }
    }
    Ok(n)
}

fn synthetic_random() -> Result<usize, String> {
    let b = Backend::Rational;
    let cp = CoordinatePlane::new(b);
    let mut s = Sampler::new(b, SEED);
    let mut n = 0;
    while n < RANDOM_CASES {
        let (a, a2, q, x) = (s.point(), s.point(), s.point(), s.point());
        if !distinct(&a, &a2) || collinear(&a, &a2, &q) {
            continue;
        }
        let got = partial_translation(&cp, &a, &a2, &q).map_err(|e| e.to_string())?;
        ensure(same(&got, &oracle_translate(&a, &a2, &q)), || format!("λ {a}->{a2} at {q}"))?;
        let tau = synthetic_translation(&cp, &a, &a2).map_err(|e| e.to_string())?;
        ensure(same(&tau.apply(&x).map_err(|e| e.to_string())?, &oracle_translate(&a, &a2, &x)), || {
            format!("τ {a}->{a2} at {x}")
        })?;

        let v = s.point();
        let e = s.nonzero();
        if !distinct(&a, &v) || collinear(&v, &a, &q) {
            continue;
        }
        let a3 = oracle_dilate(&v, &e, &a);
        let got = partial_dilatation(&cp, &v, &a, &a3, &q).map_err(|e| e.to_string())?;
        ensure(same(&got, &oracle_dilate(&v, &e, &q)), || format!("λ_V at {q}"))?;
        let sigma = synthetic_dilatation(&cp, &v, &a, &a3).map_err(|e| e.to_string())?;
        for y in [&x, &v, &q] {
            ensure(same(&sigma.apply(y).map_err(|e| e.to_string())?, &oracle_dilate(&v, &e, y)), || {
                format!("σ at {y}")
            })?;
        }
        n += 1;
    }
    Ok(n)
}

fn criterion_3() -> Outcome {
    let n3 = synthetic_finite(3)?;
    let n5 = synthetic_finite(5)?;
    let nr = synthetic_random()?;
    Ok(format!("gf:3 {n3} cases, gf:5 {n5} cases, rational {nr} seeded inputs"))
}

fn scalar_cases(scalars_: &[Scalar], translations: &[Translation], anchor: &[Point]) -> Result<usize, String> {
    let err = |e: desargues::Error| e.to_string();
    let mut n = 0;
    let b = scalars_[0].ratio().backend();
    let one = Scalar::one(&b);
    let zero = Scalar::zero(&b);
    for a in scalars_ {
        for t in translations {
            // Ring laws realised as maps on translations.
            let ta = a.apply(t).map_err(err)?;
            ensure(same(ta.offset(), &t.offset().scale(a.ratio()).map_err(err)?), || format!("{a} on {t}"))?;
            ensure(ta.offset().cross(t.offset()).map_err(err)?.is_zero_exact() == Some(true), || {
                format!("{a} moves the trace of {t}")
            })?;
            ensure(same(one.apply(t).map_err(err)?.offset(), t.offset()), || "unit".into())?;
            ensure(zero.apply(t).map_err(err)?.is_identity(None).map_err(err)? == Decision::Yes, || "zero".into())?;
            // τ^α ≠ 1 whenever α ≠ 0 and τ ≠ 1.
            if a.ratio().is_zero_exact() == Some(false) && t.is_identity(None).map_err(err)? == Decision::No {
                ensure(ta.apart_identity(None).map_err(err)?.is_some(), || format!("{t}^{a} = 1"))?;
                // The scalar is recovered from the pair of translations.
                let back = scalars::ratio_of(t, &ta, None).map_err(err)?;
                ensure(back.exact_eq(a) == Some(true), || format!("ratio of {t}, {ta}"))?;
            }
            n += 1;
        }
        for c in scalars_ {
            let (ab, ac) = (a.add(c).map_err(err)?, a.mul(c).map_err(err)?);
            ensure(ab.exact_eq(&c.add(a).map_err(err)?) == Some(true), || "add commutes".into())?;
            ensure(ac.exact_eq(&c.mul(a).map_err(err)?) == Some(true), || "mul commutes".into())?;
            for t in translations.iter().take(3) {
                let sum = ab.apply(t).map_err(err)?;
                let composed = a.apply(t).map_err(err)?.compose(&c.apply(t).map_err(err)?).map_err(err)?;
                ensure(same(sum.offset(), composed.offset()), || format!("τ^({a}+{c})"))?;
                let prod = ac.apply(t).map_err(err)?;
                let nested = a.apply(&c.apply(t).map_err(err)?).map_err(err)?;
                ensure(same(prod.offset(), nested.offset()), || format!("τ^({a}{c})"))?;
            }
            n += 1;
        }
        if a.ratio().is_zero_exact() == Some(false) {
            for p in anchor {
                let inv = scalars::inverse(a, p, None).map_err(err)?;
                ensure(inv.mul(a).map_err(err)?.exact_eq(&one) == Some(true), || format!("{a}·{inv}"))?;
                // Scalars of dilatations: α_σ equals the ratio of σ.
                let sigma = Dilatation::new(a.ratio().clone(), p.clone(), None).map_err(err)?;
                let s = scalars::from_dilatation(&sigma, None).map_err(err)?;
                ensure(s.exact_eq(a) == Some(true), || format!("α_σ for e={a}"))?;
                n += 1;
            }
        }
    }
    let report = scalars::commutativity_check(scalars_, None).map_err(err)?;
    ensure(report.holds(), || format!("{report:?}"))?;
    Ok(n)
}

fn criterion_4() -> Outcome {
    let mut details = Vec::new();
    for p in [3u64, 5] {
        let b = Backend::Gf(p);
        let fp = FinitePlane::new(b).unwrap();
        let elems: Vec<Scalar> = b.elements().unwrap().into_iter().map(Scalar::new).collect();
        let ts: Vec<Translation> = fp.points.iter().map(|c| Translation::new(c.clone())).collect();
        let n = scalar_cases(&elems, &ts, &fp.points)?;
        details.push(format!("gf:{p} {n} cases"));
    }
    let b = Backend::Rational;
    let mut s = Sampler::new(b, SEED + 4);
    let mut n = 0;
    for _ in 0..RANDOM_CASES / 10 {
        let scalars_: Vec<Scalar> = (0..3).map(|_| Scalar::new(s.value())).collect();
        let ts: Vec<Translation> = (0..4).map(|_| Translation::new(s.point())).collect();
        let anchor = [s.point()];
        n += scalar_cases(&scalars_, &ts, &anchor)?;
    }
    ensure(n >= RANDOM_CASES, || format!("only {n} rational cases"))?;
    details.push(format!("rational {n} cases"));
    Ok(details.join("; "))
}

fn skew(b: &Backend) -> Frame {
    Frame::new(
        Point::from_ints(b, 1, 0),
        Translation::new(Point::from_ints(b, 1, 1)),
        Translation::new(Point::from_ints(b, 0, 1)),
        None,
    )
    .unwrap()
}

fn criterion_5() -> Outcome {
    let err = |e: desargues::Error| e.to_string();
    let mut n = 0;
    for p in [2u64, 3] {
        let fp = FinitePlane::new(Backend::Gf(p)).unwrap();
        for frame in [Frame::canonical(&fp.backend), skew(&fp.backend)] {
            let cs: Vec<_> = fp
                .points
                .iter()
                .map(|q| coords(&frame, q, None))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            for (q, (x, y)) in fp.points.iter().zip(&cs) {
                ensure(same(&point_at(&frame, x, y).map_err(err)?, q), || format!("round trip {q}"))?;
                n += 1;
            }
            for (i, q) in fp.points.iter().enumerate() {
                for (j, r) in fp.points.iter().enumerate() {
                    let apart = q.apart(r, None).map_err(err)?.is_some();
                    let differ = cs[i].0.exact_eq(&cs[j].0) == Some(false) || cs[i].1.exact_eq(&cs[j].1) == Some(false);
                    ensure(apart == differ, || format!("apartness of {q}, {r}"))?;
                }
            }
            for l in &fp.lines {
                let params = line_params(&frame, l, None).map_err(err)?;
                let mut image = Vec::new();
                for t in fp.backend.elements().unwrap() {
                    let (x, y) = params.at(&t).map_err(err)?;
                    image.push(point_at(&frame, &x, &y).map_err(err)?);
                }
                let members: Vec<&Point> = fp.points_on(l).collect();
                ensure(image.len() == members.len(), || format!("size of {l}"))?;
                ensure(members.iter().all(|m| image.iter().any(|i| same(i, m))), || format!("points of {l}"))?;
                let back = line_from_params(&frame, &params).map_err(err)?;
                ensure(plane::lines_equal(&back, l, None).map_err(err)? == Decision::Yes, || format!("{l}"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} exact round trips on gf:2, gf:3 with canonical and skew frames"))
}

fn criterion_6() -> Outcome {
    let b = Backend::Rational;
    let mut s = Sampler::new(b, SEED + 6);
    let mut on_count = 0;
    for i in 0..RANDOM_CASES {
        let l: Line = s.line();
        let p = if i % 4 == 0 { s.point_on(&l) } else { s.point() };
        let r = real1_check(&p, &l, None).map_err(|e| e.to_string())?;
        ensure(r.agree, || format!("{p} against {l}: {r:?}"))?;
        // Independent value: cross² / |dir|².
        let cross = rat(&l.cross_of(&p).unwrap());
        let (dx, dy) = (rat(&l.dir().x), rat(&l.dir().y));
        let rho2 = &cross * &cross / (&dx * &dx + &dy * &dy);
        ensure(r.rho_squared == rho2.to_string(), || format!("ρ² {} vs {rho2}", r.rho_squared))?;
        on_count += (rho2 == BigRational::from_integer(0.into())) as usize;
    }
    Ok(format!("{RANDOM_CASES} pairs agree ({on_count} incident)"))
}

fn criterion_7() -> Outcome {
    let mut decided = 0;
    for id in configcheck::EXAMPLES {
        for budget in [16, 64, 256] {
            let r = configcheck::brouwerian_demo(id, budget).map_err(|e| e.to_string())?;
            for a in &r.instances[0].attempts {
                ensure(a.outcome == DemoOutcome::Undecided { budget }, || format!("{id} hard stream: {a:?}"))?;
            }
        }
        for budget in [11, 64] {
            let r = configcheck::brouwerian_demo(id, budget).map_err(|e| e.to_string())?;
            for a in &r.instances[1].attempts {
                ensure(matches!(a.outcome, DemoOutcome::Decided { verified: true, .. }), || {
                    format!("{id} c=2^-10 at {budget}: {a:?}")
                })?;
                decided += 1;
            }
        }
    }
    Ok(format!(
        "{} examples undecided at 16/64/256; {decided} verified decisions for c = 2^-10",
        configcheck::EXAMPLES.len()
    ))
}

fn criterion_8() -> Outcome {
    let argv = |field: &str, mode: &str| {
        vec![
            "desargues", "--format", "json", "verify", "--field", field, "--mode", mode, "--seed", "7", "--n", "100",
            "--suite", "all",
        ]
        .into_iter()
        .map(String::from)
        .collect::<Vec<_>>()
    };
    for (field, mode) in [("rational", "random"), ("gf:5", "random"), ("gf:3", "exhaustive")] {
        let a = desargues::cli::run(argv(field, mode));
        let b = desargues::cli::run(argv(field, mode));
        ensure(a.code == 0, || format!("{field}: exit {} {}", a.code, a.stderr))?;
        ensure(a.stdout == b.stdout, || format!("{field}: reports differ"))?;
    }
    Ok("byte-identical JSON reports for rational, gf:5 (seed 7) and gf:3".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("finite-plane exhaustive suite", criterion_1),
        ("Desargues and Pappus configurations", criterion_2),
        ("synthetic constructions against oracles", criterion_3),
        ("scalar ring", criterion_4),
        ("coordinatization round trip", criterion_5),
        ("distance criterion agreement", criterion_6),
        ("undecidability demos", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} PASS {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
