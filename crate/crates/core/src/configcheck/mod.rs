//! Executable checks: Desargues and Pappus configurations, the axiom suite,
//! the distance criterion on the real plane, and the undecidability demos.

mod axioms;
mod demo;
mod desargues;
mod real1;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::field::{Backend, FieldValue};
use crate::plane::{Line, Point};

pub use axioms::{verify_axioms, verify_configurations, ITERATION_LIMIT};
pub use demo::{brouwerian_demo, demo_with, DemoOutcome, DemoReport, EXAMPLES};
pub use desargues::{
    check_d1, check_d2, check_pappus, enumerate_d1, enumerate_d2, enumerate_pappus, sample_d1, sample_d2,
    sample_pappus, CheckOutcome, DesarguesConfig, PappusConfig, Variant,
};
pub use real1::{real1_check, ConditionStatus, Real1Report};

/// How a suite chooses its cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Random { seed: u64, n: usize },
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Exhaustive => write!(f, "exhaustive"),
            Mode::Random { seed, n } => write!(f, "random(seed={seed}, n={n})"),
        }
    }
}

/// Tallies for one check. `vacuous` counts cases whose hypotheses failed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: u64,
    pub failed: u64,
    pub undecided: u64,
    pub vacuous: u64,
    pub counterexamples: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

const MAX_COUNTEREXAMPLES: usize = 10;

impl Tally {
    pub fn pass(&mut self) {
        self.passed += 1;
    }

    pub fn fail(&mut self, what: impl FnOnce() -> String) {
        self.failed += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(what());
        }
    }

    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.pass()
        } else {
            self.fail(what)
        }
    }

    pub fn status(&self) -> Status {
        if self.failed > 0 {
            Status::Fail
        } else if self.undecided > 0 || self.skipped.is_some() {
            Status::Undecided
        } else {
            Status::Pass
        }
    }

    fn summary(&self) -> String {
        if let Some(why) = &self.skipped {
            return format!("skipped: {why}");
        }
        if self.passed + self.failed + self.undecided + self.vacuous == 0 {
            return "no cases".into();
        }
        let mut s = format!("{} passed", self.passed);
        for (n, label) in [(self.failed, "failed"), (self.undecided, "undecided"), (self.vacuous, "vacuous")] {
            if n > 0 {
                s.push_str(&format!(", {n} {label}"));
            }
        }
        if !self.detail.is_empty() {
            s.push_str("; ");
            s.push_str(&self.detail);
        }
        if let Some(first) = self.counterexamples.first() {
            s.push_str("; counterexample: ");
            s.push_str(first);
        }
        s
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Undecided,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Undecided => "UNDECIDED",
            Status::Fail => "FAIL",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub backend: String,
    pub mode: Mode,
    pub checks: BTreeMap<String, Tally>,
}

impl VerificationReport {
    pub fn new(suite: &str, backend: &Backend, mode: Mode) -> Self {
        VerificationReport {
            suite: suite.into(),
            backend: backend.to_string(),
            mode,
            checks: BTreeMap::new(),
        }
    }

    /// Worst status over all checks.
    pub fn status(&self) -> Status {
        self.checks.values().map(Tally::status).max().unwrap_or(Status::Pass)
    }

    /// One `CHECK <id> <status> <detail>` line per check, sorted by id.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (id, t) in &self.checks {
            out.push_str(&format!("CHECK {id} {} {}\n", t.status(), t.summary()));
        }
        out
    }
}

/// Seeded source of field elements, points and lines.
pub struct Sampler {
    pub backend: Backend,
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(backend: Backend, seed: u64) -> Self {
        Sampler {
            backend,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Rationals are `n/d` with `|n| ≤ 1000` and `1 ≤ d ≤ 100`.
    pub fn value(&mut self) -> FieldValue {
        match self.backend {
            Backend::Gf(p) => self.backend.int(self.rng.gen_range(0..p as i64)),
            _ => {
                let n: i64 = self.rng.gen_range(-1000..=1000);
                let d: i64 = self.rng.gen_range(1..=100);
                let r = BigRational::new(BigInt::from(n), BigInt::from(d));
                self.backend.from_rational(&r).expect("rational backends accept every fraction")
            }
        }
    }

    pub fn nonzero(&mut self) -> FieldValue {
        loop {
            let v = self.value();
            if v.is_zero_exact() == Some(false) {
                return v;
            }
        }
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    pub fn point(&mut self) -> Point {
        Point {
            x: self.value(),
            y: self.value(),
        }
    }

    pub fn direction(&mut self) -> Point {
        loop {
            let p = self.point();
            if p.x.is_zero_exact() == Some(false) || p.y.is_zero_exact() == Some(false) {
                return p;
            }
        }
    }

    pub fn line(&mut self) -> Line {
        let base = self.point();
        let dir = self.direction();
        Line::new(base, dir, None).expect("direction is nonzero")
    }

    pub fn point_on(&mut self, l: &Line) -> Point {
        let t = self.value();
        l.point_at(&t).expect("same backend")
    }
}
