//! The axiom suite and the configuration suite.
//!
//! Over GF(p) the exhaustive mode walks every case; the random mode draws
//! seeded samples over any decidable backend.

use super::desargues::{
    check_d1, check_d2, check_pappus, enumerate_d1, enumerate_d2, enumerate_pappus, enumeration_sizes, sample_d1,
    sample_d2, sample_pappus, CheckOutcome,
};
use super::{Mode, Sampler, Tally, VerificationReport};
use crate::error::{Error, Result};
use crate::field::Backend;
use crate::plane::{self, Decision, FinitePlane, Line, Point, Side};
use crate::symmetry::synthetic::{synthetic_dilatation, synthetic_translation, CoordinatePlane};
use crate::symmetry::{dilatation_fixing, translation_between};

/// Exhaustive checks whose loop count would exceed this are skipped.
pub const ITERATION_LIMIT: u64 = 1_000_000;

fn decidable(backend: &Backend) -> Result<()> {
    if backend.is_decidable() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!(
            "suites need decidable equality; {backend} only offers budgeted apartness"
        )))
    }
}

fn finite(backend: &Backend) -> Result<FinitePlane> {
    FinitePlane::new(*backend)
        .ok_or_else(|| Error::Unsupported(format!("exhaustive mode needs a finite field, not {backend}")))
}

fn same(a: &Point, b: &Point) -> bool {
    a.exact_eq(b) == Some(true)
}

fn yes(d: Result<Decision>) -> bool {
    matches!(d, Ok(Decision::Yes))
}

fn no(d: Result<Decision>) -> bool {
    matches!(d, Ok(Decision::No))
}

fn on(p: &Point, l: &Line) -> bool {
    yes(plane::on_line(p, l, None))
}

fn parallel(l: &Line, m: &Line) -> bool {
    yes(plane::is_parallel(l, m, None))
}

fn equal(l: &Line, m: &Line) -> bool {
    yes(plane::lines_equal(l, m, None))
}

fn apart(p: &Point, q: &Point) -> bool {
    matches!(p.apart(q, None), Ok(Some(_)))
}

/// Runs `body` unless `cases` is over the limit.
fn guarded(report: &mut VerificationReport, id: &str, cases: u64, body: impl FnOnce(&mut Tally)) {
    let mut t = Tally::default();
    if cases > ITERATION_LIMIT {
        t.skipped = Some(format!("too large ({cases} iterations)"));
    } else {
        body(&mut t);
    }
    report.checks.insert(id.into(), t);
}

// Shared per-case checks: each takes the case data and records into a tally.

fn check_join(t: &mut Tally, p: &Point, q: &Point, others: &[&Line]) {
    let Ok(l) = plane::join(p, q, None) else {
        return t.fail(|| format!("join({p}, {q}) failed"));
    };
    let mut ok = on(p, &l) && on(q, &l);
    ok &= equal(&l, &plane::join(q, p, None).expect("apart points join"));
    // Any other line through both points must be the join.
    for m in others {
        if on(p, m) && on(q, m) {
            ok &= matches!(plane::line_apart(&l, m, None), Err(Error::LinesEqual));
        }
    }
    t.check(ok, || format!("join({p}, {q})"));
}

fn check_parallel_through(t: &mut Tally, p: &Point, l: &Line, others: &[&Line]) {
    let Ok(m) = plane::parallel_through(p, l) else {
        return t.fail(|| format!("parallel through {p} to {l} failed"));
    };
    let mut ok = on(p, &m) && parallel(&m, l);
    for n in others {
        if on(p, n) && parallel(n, l) {
            ok &= equal(n, &m);
        }
    }
    t.check(ok, || format!("parallel through {p} to {l}"));
}

fn check_l1(t: &mut Tally, l: &Line, m: &Line, q: &Point, points_on: impl Fn(&Line) -> Vec<Point>) {
    let Ok(w) = plane::nonparallel(l, m, None) else {
        t.vacuous += 1;
        return;
    };
    let x = plane::intersect(l, m, &w).expect("witnessed");
    if !apart(q, &x) {
        t.vacuous += 1;
        return;
    }
    let Ok(choice) = plane::l1_decide(l, m, &w, q, None) else {
        return t.fail(|| format!("no branch for {q} against {l}, {m}"));
    };
    let chosen = if choice.is_first() { l } else { m };
    let ok = plane::verify_outside(q, chosen, choice.witness())
        && points_on(chosen).iter().all(|r| apart(q, r))
        && !on(q, chosen);
    t.check(ok, || format!("{q} against {l}, {m}"));
}

fn check_l2(t: &mut Tally, l: &Line, m: &Line, n: &Line) {
    let Ok(w) = plane::nonparallel(l, m, None) else {
        t.vacuous += 1;
        return;
    };
    let Ok(choice) = plane::l2_decide(l, m, &w, n, None) else {
        return t.fail(|| format!("no branch for {n} against {l}, {m}"));
    };
    let chosen = if choice.is_first() { l } else { m };
    let ok = plane::verify_nonparallel(n, chosen, choice.witness())
        && plane::intersect(n, chosen, choice.witness())
            .map(|x| on(&x, n) && on(&x, chosen))
            .unwrap_or(false);
    t.check(ok, || format!("{n} against {l}, {m}"));
}

/// The synthetic translation taking `p` to `q` agrees with `X ↦ X + (q − p)`
/// on every point of `xs`.
fn check_k1(t: &mut Tally, cp: &CoordinatePlane, p: &Point, q: &Point, xs: &[Point]) {
    let oracle = translation_between(p, q).expect("same backend");
    if !apart(p, q) {
        let ok = xs.iter().all(|x| same(&oracle.apply(x).expect("same backend"), x));
        return t.check(ok, || format!("identity translation at {p}"));
    }
    let Ok(tau) = synthetic_translation(cp, p, q) else {
        return t.fail(|| format!("no translation {p} -> {q}"));
    };
    let ok = xs.iter().all(|x| match tau.apply(x) {
        Ok(y) => same(&y, &oracle.apply(x).expect("same backend")),
        Err(_) => false,
    });
    t.check(ok, || format!("translation {p} -> {q}"));
}

/// The synthetic dilatation fixing `v` with `p ↦ pp` agrees with the closed form.
fn check_k2(t: &mut Tally, cp: &CoordinatePlane, v: &Point, p: &Point, pp: &Point, xs: &[Point]) {
    let Ok(oracle) = dilatation_fixing(v, p, pp, None) else {
        t.vacuous += 1;
        return;
    };
    let Ok(sigma) = synthetic_dilatation(cp, v, p, pp) else {
        return t.fail(|| format!("no dilatation fixing {v} with {p} -> {pp}"));
    };
    let ok = xs.iter().all(|x| match sigma.apply(x) {
        Ok(y) => same(&y, &oracle.apply(x).expect("same backend")),
        Err(_) => false,
    });
    t.check(ok, || format!("dilatation fixing {v} with {p} -> {pp}"));
}

/// The three sides of a noncollinear triangle are pairwise nonparallel.
fn check_triangle(t: &mut Tally, a: &Point, b: &Point, c: &Point) {
    let Ok(ab) = plane::join(a, b, None) else {
        t.vacuous += 1;
        return;
    };
    if plane::outside(c, &ab, None).is_err() {
        t.vacuous += 1;
        return;
    }
    let ac = plane::join(a, c, None).expect("c is outside a+b");
    let bc = plane::join(b, c, None).expect("c is outside a+b");
    let ok = [(&ab, &ac), (&ab, &bc), (&ac, &bc)]
        .iter()
        .all(|(l, m)| plane::nonparallel(l, m, None).is_ok_and(|w| plane::verify_nonparallel(l, m, &w)));
    t.check(ok, || format!("triangle {a}, {b}, {c}"));
}

/// Distinct parallel lines: every point of one is apart from, and outside,
/// the other.
fn check_pointwise_apart(t: &mut Tally, l: &Line, m: &Line, ps: &[Point], qs: &[Point]) {
    if !parallel(l, m) || !no(plane::lines_equal(l, m, None)) {
        t.vacuous += 1;
        return;
    }
    let ok = ps.iter().all(|p| plane::outside(p, m, None).is_ok() && qs.iter().all(|q| apart(p, q)))
        && qs.iter().all(|q| plane::outside(q, l, None).is_ok());
    t.check(ok, || format!("{l} and {m}"));
}

fn check_two_points(t: &mut Tally, l: &Line) {
    let a = l.base().clone();
    let b = l.base().try_add(l.dir()).expect("same backend");
    t.check(on(&a, l) && on(&b, l) && apart(&a, &b), || format!("{l}"));
}

fn check_outside_iff_not_on(t: &mut Tally, p: &Point, l: &Line) {
    let outside = plane::outside(p, l, None);
    let ok = match plane::on_line(p, l, None) {
        Ok(Decision::Yes) => matches!(outside, Err(Error::NotOutside)),
        Ok(Decision::No) => outside.is_ok_and(|w| plane::verify_outside(p, l, &w)),
        _ => false,
    };
    t.check(ok, || format!("{p} against {l}"));
}

/// Lines sharing a point are parallel only if equal; equal lines are parallel.
fn check_parallel_characterization(t: &mut Tally, l: &Line, m: &Line, common: Option<&Point>) {
    let mut ok = true;
    if equal(l, m) {
        ok &= parallel(l, m);
    }
    if let Some(p) = common {
        if parallel(l, m) {
            ok &= equal(l, m);
        }
        ok &= on(p, l) && on(p, m);
    }
    t.check(ok, || format!("{l} and {m}"));
}

/// Anti-reflexive, symmetric, cotransitive and tight.
fn check_point_apartness(t: &mut Tally, p: &Point, q: &Point, r: &Point) {
    let mut ok = !apart(p, p) && apart(p, q) == apart(q, p);
    if apart(p, q) {
        ok &= apart(p, r) || apart(q, r);
    } else {
        ok &= same(p, q);
    }
    t.check(ok, || format!("{p}, {q}, {r}"));
}

fn lines_apart(l: &Line, m: &Line) -> bool {
    plane::line_apart(l, m, None).is_ok()
}

fn check_line_apartness(t: &mut Tally, l: &Line, m: &Line, n: &Line) {
    let mut ok = !lines_apart(l, l) && lines_apart(l, m) == lines_apart(m, l);
    if lines_apart(l, m) {
        ok &= lines_apart(l, n) || lines_apart(m, n);
        // The separating point really is on one line and outside the other.
        if let Ok(sep) = plane::line_apart(l, m, None) {
            let (on_l, off) = match sep.on {
                Side::First => (l, m),
                Side::Second => (m, l),
            };
            ok &= on(&sep.point, on_l) && plane::verify_outside(&sep.point, off, &sep.witness);
        }
    } else {
        ok &= equal(l, m);
    }
    t.check(ok, || format!("{l}, {m}, {n}"));
}

/// Runs the axiom suite. Exhaustive mode needs GF(p); random mode takes any
/// decidable backend.
pub fn verify_axioms(backend: &Backend, mode: Mode) -> Result<VerificationReport> {
    decidable(backend)?;
    let mut report = VerificationReport::new("axioms", backend, mode);
    match mode {
        Mode::Exhaustive => exhaustive_axioms(&finite(backend)?, &mut report),
        Mode::Random { seed, n } => random_axioms(backend, seed, n, &mut report),
    }
    Ok(report)
}

fn exhaustive_axioms(fp: &FinitePlane, report: &mut VerificationReport) {
    let cp = CoordinatePlane::new(fp.backend);
    let pts = &fp.points;
    let lines: Vec<&Line> = fp.lines.iter().collect();
    let (np, nl) = (pts.len() as u64, lines.len() as u64);
    let on_line = |l: &Line| fp.points_on(l).cloned().collect::<Vec<_>>();
    let p = fp.backend.elements().map_or(0, |e| e.len()) as u64;

    guarded(report, "counts", nl * np, |t| {
        let mut canon: Vec<_> = fp.lines.iter().filter_map(Line::canonical).collect();
        canon.sort();
        canon.dedup();
        t.check(np == p * p, || format!("{np} points"));
        t.check(canon.len() as u64 == p * p + p, || format!("{} distinct lines", canon.len()));
        t.check(fp.pencils.len() as u64 == p + 1, || format!("{} pencils", fp.pencils.len()));
        for pencil in &fp.pencils {
            t.check(pencil.len() as u64 == p, || format!("pencil of {} lines", pencil.len()));
        }
        for l in &fp.lines {
            let k = on_line(l).len() as u64;
            t.check(k == p, || format!("{l} has {k} points"));
        }
        // Each line arises from p(p-1) ordered pairs of distinct points.
        for l in &fp.lines {
            let c = l.canonical();
            let k = pts
                .iter()
                .flat_map(|a| pts.iter().map(move |b| (a, b)))
                .filter(|(a, b)| apart(a, b))
                .filter(|(a, b)| plane::join(a, b, None).ok().and_then(|j| j.canonical()) == c)
                .count() as u64;
            t.check(k == p * (p - 1), || format!("{l} joins {k} ordered pairs"));
        }
        t.detail = format!(
            "{np} points, {} lines, {} pencils, {p} points per line",
            canon.len(),
            fp.pencils.len()
        );
    });
    guarded(report, "G1", np * np * nl, |t| {
        for a in pts {
            for b in pts {
                if apart(a, b) {
                    check_join(t, a, b, &lines);
                }
            }
        }
    });
    guarded(report, "G2", np * nl * nl, |t| {
        for a in pts {
            for l in &lines {
                check_parallel_through(t, a, l, &lines);
            }
        }
    });
    guarded(report, "G3", np, |t| {
        let (o, e1, e2) = plane::canonical_frame(&fp.backend);
        let l = plane::join(&o, &e1, None).expect("frame points are apart");
        t.check(plane::outside(&e2, &l, None).is_ok(), || "E2 on O+E1".into());
        // Some point lies outside every line.
        for l in &lines {
            t.check(pts.iter().any(|q| plane::outside(q, l, None).is_ok()), || format!("{l} covers the plane"));
        }
    });
    guarded(report, "L1", nl * nl * np * p, |t| {
        for l in &lines {
            for m in &lines {
                for q in pts {
                    check_l1(t, l, m, q, on_line);
                }
            }
        }
    });
    guarded(report, "L2", nl * nl * nl, |t| {
        for l in &lines {
            for m in &lines {
                for n in &lines {
                    check_l2(t, l, m, n);
                }
            }
        }
    });
    guarded(report, "K1", np * np * np, |t| {
        for a in pts {
            for b in pts {
                check_k1(t, &cp, a, b, pts);
            }
        }
    });
    guarded(report, "K2", np * np * p * np, |t| {
        for v in pts {
            for a in pts {
                let Ok(l) = plane::join(v, a, None) else { continue };
                for b in on_line(&l) {
                    if apart(&b, v) {
                        check_k2(t, &cp, v, a, &b, pts);
                    }
                }
            }
        }
    });
    guarded(report, "frame-sides-nonparallel", np * np * np, |t| {
        for a in pts {
            for b in pts {
                for c in pts {
                    check_triangle(t, a, b, c);
                }
            }
        }
    });
    guarded(report, "parallel-lines-pointwise-apart", nl * nl * p * p, |t| {
        for l in &lines {
            for m in &lines {
                check_pointwise_apart(t, l, m, &on_line(l), &on_line(m));
            }
        }
    });
    guarded(report, "two-points-per-line", nl, |t| {
        for l in &lines {
            check_two_points(t, l);
        }
    });
    guarded(report, "pencil-line-bijection", nl * nl * np, |t| {
        // Through each point passes exactly one line of each pencil, and a
        // line nonparallel to a pencil meets each of its lines exactly once.
        for pencil in &fp.pencils {
            for a in pts {
                let k = pencil.iter().filter(|&&i| on(a, &fp.lines[i])).count();
                t.check(k == 1, || format!("{a} lies on {k} lines of a pencil"));
            }
            for l in &lines {
                if parallel(l, &fp.lines[pencil[0]]) {
                    continue;
                }
                let mut hits: Vec<Point> = Vec::new();
                for &i in pencil {
                    let m = &fp.lines[i];
                    hits.extend(on_line(l).into_iter().filter(|x| on(x, m)));
                }
                let distinct = hits.iter().enumerate().all(|(i, x)| hits[..i].iter().all(|y| apart(x, y)));
                t.check(hits.len() as u64 == p && distinct, || format!("{l} meets the pencil {} times", hits.len()));
            }
        }
    });
    guarded(report, "outside-iff-not-on", np * nl, |t| {
        for a in pts {
            for l in &lines {
                check_outside_iff_not_on(t, a, l);
            }
        }
    });
    guarded(report, "parallel-characterization", nl * nl * np, |t| {
        for l in &lines {
            for m in &lines {
                let common = pts.iter().find(|x| on(x, l) && on(x, m));
                check_parallel_characterization(t, l, m, common);
            }
        }
    });
    guarded(report, "point-apartness", np * np * np, |t| {
        for a in pts {
            for b in pts {
                for c in pts {
                    check_point_apartness(t, a, b, c);
                }
            }
        }
    });
    guarded(report, "line-apartness", nl * nl * nl, |t| {
        for l in &lines {
            for m in &lines {
                for n in &lines {
                    check_line_apartness(t, l, m, n);
                }
            }
        }
    });
}

fn random_axioms(backend: &Backend, seed: u64, n: usize, report: &mut VerificationReport) {
    let cp = CoordinatePlane::new(*backend);
    let mut s = Sampler::new(*backend, seed);
    let mut run = |id: &str, s: &mut Sampler, case: &mut dyn FnMut(&mut Sampler, &mut Tally)| {
        let mut t = Tally::default();
        for _ in 0..n {
            case(s, &mut t);
        }
        report.checks.insert(id.into(), t);
    };
    let two_on = |s: &mut Sampler, l: &Line| vec![s.point_on(l), s.point_on(l)];

    run("G1", &mut s, &mut |s, t| {
        let (a, b) = (s.point(), s.point());
        if apart(&a, &b) {
            // A second line through both points, built from a third point on the join.
            let j = plane::join(&a, &b, None).expect("apart");
            let c = s.point_on(&j);
            let other = if apart(&a, &c) { plane::join(&c, &a, None).ok() } else { None };
            check_join(t, &a, &b, &other.iter().collect::<Vec<_>>());
        } else {
            t.vacuous += 1;
        }
    });
    run("G2", &mut s, &mut |s, t| {
        let (a, l) = (s.point(), s.line());
        let m = plane::parallel_through(&a, &l).expect("same backend");
        let other = plane::parallel_through(&s.point_on(&m), &l).expect("same backend");
        check_parallel_through(t, &a, &l, &[&other]);
    });
    run("G3", &mut s, &mut |_, t| {
        let (o, e1, e2) = plane::canonical_frame(backend);
        let l = plane::join(&o, &e1, None).expect("frame points are apart");
        t.check(plane::outside(&e2, &l, None).is_ok(), || "E2 on O+E1".into());
    });
    run("L1", &mut s, &mut |s, t| {
        let (l, m) = (s.line(), s.line());
        let q = if s.coin() { s.point_on(&l) } else { s.point() };
        check_l1(t, &l, &m, &q, |line| {
            let b = line.base();
            vec![b.clone(), b.try_add(line.dir()).expect("same backend"), b.try_sub(line.dir()).expect("same backend")]
        });
    });
    run("L2", &mut s, &mut |s, t| {
        let (l, m) = (s.line(), s.line());
        let n = if s.coin() {
            plane::parallel_through(&s.point(), &l).expect("same backend")
        } else {
            s.line()
        };
        check_l2(t, &l, &m, &n);
    });
    run("K1", &mut s, &mut |s, t| {
        let (a, b) = (s.point(), s.point());
        let xs = vec![s.point(), s.point(), a.clone()];
        check_k1(t, &cp, &a, &b, &xs);
    });
    run("K2", &mut s, &mut |s, t| {
        let (v, a) = (s.point(), s.point());
        let Ok(l) = plane::join(&v, &a, None) else {
            t.vacuous += 1;
            return;
        };
        let b = s.point_on(&l);
        let xs = vec![s.point(), s.point(), v.clone(), a.clone()];
        check_k2(t, &cp, &v, &a, &b, &xs);
    });
    run("frame-sides-nonparallel", &mut s, &mut |s, t| {
        check_triangle(t, &s.point(), &s.point(), &s.point());
    });
    run("parallel-lines-pointwise-apart", &mut s, &mut |s, t| {
        let l = s.line();
        let m = plane::parallel_through(&s.point(), &l).expect("same backend");
        let (ps, qs) = (two_on(s, &l), two_on(s, &m));
        check_pointwise_apart(t, &l, &m, &ps, &qs);
    });
    run("two-points-per-line", &mut s, &mut |s, t| check_two_points(t, &s.line()));
    run("pencil-line-bijection", &mut s, &mut |s, t| {
        // The line of a pencil through a point of l meets l exactly there.
        let (l, d) = (s.line(), s.line());
        let x = s.point_on(&l);
        let m = plane::parallel_through(&x, &d).expect("same backend");
        match plane::nonparallel(&l, &m, None) {
            Ok(w) => t.check(plane::intersect(&l, &m, &w).is_ok_and(|y| same(&x, &y)), || format!("{x} on {l}")),
            Err(_) => t.vacuous += 1,
        }
    });
    run("outside-iff-not-on", &mut s, &mut |s, t| {
        let l = s.line();
        let a = if s.coin() { s.point_on(&l) } else { s.point() };
        check_outside_iff_not_on(t, &a, &l);
    });
    run("parallel-characterization", &mut s, &mut |s, t| {
        let l = s.line();
        let a = s.point_on(&l);
        let m = if s.coin() {
            plane::parallel_through(&a, &l).expect("same backend")
        } else {
            Line::new(a.clone(), s.direction(), None).expect("nonzero direction")
        };
        check_parallel_characterization(t, &l, &m, Some(&a));
    });
    run("point-apartness", &mut s, &mut |s, t| {
        let a = s.point();
        let b = if s.coin() { a.clone() } else { s.point() };
        check_point_apartness(t, &a, &b, &s.point());
    });
    run("line-apartness", &mut s, &mut |s, t| {
        let l = s.line();
        let m = if s.coin() {
            let dir = l.dir().scale(&s.nonzero()).expect("same backend");
            Line::new(s.point_on(&l), dir, None).expect("nonzero direction")
        } else {
            s.line()
        };
        check_line_apartness(t, &l, &m, &s.line());
    });
}

fn record(t: &mut Tally, outcome: Result<CheckOutcome>, what: impl FnOnce() -> String) {
    match outcome {
        Ok(CheckOutcome::Holds) => t.pass(),
        Ok(CheckOutcome::HypothesisFails(_)) => t.vacuous += 1,
        Ok(CheckOutcome::Undecided(_)) => t.undecided += 1,
        Ok(CheckOutcome::Violated(_)) => t.fail(what),
        Err(e) => t.fail(|| format!("{}: {e}", what())),
    }
}

/// Runs the Desargues and Pappus checks over every configuration of GF(p)
/// (exhaustive) or over seeded samples, half built to satisfy the hypotheses.
pub fn verify_configurations(backend: &Backend, mode: Mode) -> Result<VerificationReport> {
    decidable(backend)?;
    let mut report = VerificationReport::new("configurations", backend, mode);
    match mode {
        Mode::Exhaustive => {
            let fp = finite(backend)?;
            let p = fp.backend.elements().map_or(0, |e| e.len()) as u64;
            let [d1, d2, pap] = enumeration_sizes(p);
            guarded(&mut report, "D1", d1, |t| {
                for cfg in enumerate_d1(&fp) {
                    record(t, check_d1(&cfg, None), || cfg.to_json().to_string());
                }
            });
            guarded(&mut report, "D2", d2, |t| {
                for cfg in enumerate_d2(&fp) {
                    record(t, check_d2(&cfg, None), || cfg.to_json().to_string());
                }
            });
            guarded(&mut report, "P", pap, |t| {
                for cfg in enumerate_pappus(&fp) {
                    record(t, check_pappus(&cfg, None), || cfg.to_json().to_string());
                }
            });
        }
        Mode::Random { seed, n } => {
            let mut s = Sampler::new(*backend, seed);
            let mut t = Tally::default();
            for i in 0..n {
                let cfg = sample_d1(&mut s, i % 2 == 0);
                record(&mut t, check_d1(&cfg, None), || cfg.to_json().to_string());
            }
            report.checks.insert("D1".into(), t);
            let mut t = Tally::default();
            for i in 0..n {
                let cfg = sample_d2(&mut s, i % 2 == 0);
                record(&mut t, check_d2(&cfg, None), || cfg.to_json().to_string());
            }
            report.checks.insert("D2".into(), t);
            let mut t = Tally::default();
            for i in 0..n {
                let cfg = sample_pappus(&mut s, i % 2 == 0);
                record(&mut t, check_pappus(&cfg, None), || cfg.to_json().to_string());
            }
            report.checks.insert("P".into(), t);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_and_gf3_pass_with_expected_counts() {
        for (p, detail) in [
            (2, "4 points, 6 lines, 3 pencils, 2 points per line"),
            (3, "9 points, 12 lines, 4 pencils, 3 points per line"),
        ] {
            let r = verify_axioms(&Backend::Gf(p), Mode::Exhaustive).unwrap();
            assert_eq!(r.status(), super::super::Status::Pass, "{}", r.to_text());
            assert_eq!(r.checks["counts"].detail, detail);
            assert!(r.checks["L1"].passed > 0 && r.checks["K2"].passed > 0);
        }
    }

    #[test]
    fn rational_random_passes() {
        let r = verify_axioms(&Backend::Rational, Mode::Random { seed: 1, n: 60 }).unwrap();
        assert_eq!(r.status(), super::super::Status::Pass, "{}", r.to_text());
    }

    #[test]
    fn unsupported_modes() {
        assert!(matches!(
            verify_axioms(&Backend::Rational, Mode::Exhaustive),
            Err(Error::Unsupported(_))
        ));
        let dyadic = Backend::Dyadic { default_budget: 32 };
        assert!(matches!(
            verify_axioms(&dyadic, Mode::Random { seed: 1, n: 1 }),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn oversized_enumerations_are_skipped() {
        let r = verify_configurations(&Backend::Gf(5), Mode::Exhaustive).unwrap();
        assert_eq!(r.status(), super::super::Status::Undecided);
        assert!(r.checks["D1"].skipped.as_deref().unwrap().starts_with("too large"));
        assert!(r.to_text().contains("CHECK D1 UNDECIDED skipped: too large"));
    }

    #[test]
    fn gf5_sampled_configurations_hold() {
        let r = verify_configurations(&Backend::Gf(5), Mode::Random { seed: 5, n: 200 }).unwrap();
        assert_eq!(r.status(), super::super::Status::Pass, "{}", r.to_text());
    }

    #[test]
    fn gf3_configurations_all_hold() {
        let r = verify_configurations(&Backend::Gf(3), Mode::Exhaustive).unwrap();
        assert_eq!(r.status(), super::super::Status::Pass, "{}", r.to_text());
        for id in ["D1", "D2", "P"] {
            assert!(r.checks[id].passed > 0, "{id}");
        }
    }
}
