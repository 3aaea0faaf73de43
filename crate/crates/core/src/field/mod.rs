//! Heyting fields with witnessed apartness.
//!
//! Three backends share the [`FieldValue`] type: exact rationals, prime
//! fields GF(p), and budgeted dyadic reals. The first two decide equality;
//! the dyadic backend only ever proves apartness, and reports
//! [`Apartness::Undecided`] once its budget is spent.

mod dyadic;
mod gfp;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use dyadic::{DyadicReal, Interval};
pub use gfp::{is_prime, Gf, MAX_MODULUS};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("backend mismatch: {left} vs {right}")]
    BackendMismatch { left: FieldKind, right: FieldKind },
    #[error("negative budget {0}")]
    NegativeBudget(i64),
    #[error("value is not invertible")]
    NotInvertible,
    #[error("undecided within budget {budget}")]
    Undecided { budget: u32 },
    #[error("apartness witness missing or invalid")]
    MissingWitness,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds 2^31")]
    ModulusTooLarge(u64),
    #[error("denominator vanishes in GF({0})")]
    ZeroDenominator(u64),
    #[error("cannot parse field value {0:?}")]
    Parse(String),
    #[error("unknown field spec {0:?}")]
    UnknownBackend(String),
}

/// Maximum precision a dyadic query may interrogate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Budget(u32);

impl Budget {
    pub fn new(value: i64) -> Result<Self, FieldError> {
        if value < 0 {
            return Err(FieldError::NegativeBudget(value));
        }
        Ok(Budget(value.min(u32::MAX as i64) as u32))
    }

    pub const fn of(value: u32) -> Self {
        Budget(value)
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Which arithmetic a value lives in. Two values combine only when their
/// kinds are equal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    Gf(u64),
    Dyadic,
}

impl fmt::Display for FieldKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldKind::Rational => write!(f, "rational"),
            FieldKind::Gf(p) => write!(f, "gf:{p}"),
            FieldKind::Dyadic => write!(f, "dyadic"),
        }
    }
}

/// A field selected by spec string: `rational`, `gf:<p>` or `dyadic:<budget>`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Rational,
    Gf(u64),
    Dyadic { default_budget: u32 },
}

impl FromStr for Backend {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "rational" {
            return Ok(Backend::Rational);
        }
        if let Some(p) = s.strip_prefix("gf:") {
            let p: u64 = p.parse().map_err(|_| FieldError::UnknownBackend(s.into()))?;
            gfp::check_modulus(p)?;
            return Ok(Backend::Gf(p));
        }
        if let Some(b) = s.strip_prefix("dyadic:") {
            let b: i64 = b.parse().map_err(|_| FieldError::UnknownBackend(s.into()))?;
            return Ok(Backend::Dyadic {
                default_budget: Budget::new(b)?.get(),
            });
        }
        Err(FieldError::UnknownBackend(s.into()))
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Rational => write!(f, "rational"),
            Backend::Gf(p) => write!(f, "gf:{p}"),
            Backend::Dyadic { default_budget } => write!(f, "dyadic:{default_budget}"),
        }
    }
}

impl Backend {
    pub fn kind(&self) -> FieldKind {
        match self {
            Backend::Rational => FieldKind::Rational,
            Backend::Gf(p) => FieldKind::Gf(*p),
            Backend::Dyadic { .. } => FieldKind::Dyadic,
        }
    }

    pub fn is_decidable(&self) -> bool {
        !matches!(self, Backend::Dyadic { .. })
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<FieldValue, FieldError> {
        Ok(match self {
            Backend::Rational => FieldValue::Rational(r.clone()),
            Backend::Gf(p) => {
                let p = *p;
                let reduce = |n: &BigInt| {
                    let m = BigInt::from(p);
                    let r = ((n % &m) + &m) % &m;
                    Gf::from_residue(r.try_into().unwrap_or(0u64), p)
                };
                let den = reduce(r.denom())
                    .inv()
                    .ok_or(FieldError::ZeroDenominator(p))?;
                FieldValue::Gf(reduce(r.numer()).mul(den))
            }
            Backend::Dyadic { default_budget } => {
                FieldValue::Dyadic(DyadicReal::from_rational(r.clone(), *default_budget))
            }
        })
    }

    pub fn int(&self, n: i64) -> FieldValue {
        match self {
            Backend::Gf(p) => FieldValue::Gf(Gf::reduce(n, *p)),
            _ => self
                .from_rational(&BigRational::from_integer(n.into()))
                .expect("integers embed in every backend"),
        }
    }

    pub fn zero(&self) -> FieldValue {
        self.int(0)
    }

    pub fn one(&self) -> FieldValue {
        self.int(1)
    }

    /// Every element of a finite field, in residue order.
    pub fn elements(&self) -> Option<Vec<FieldValue>> {
        match self {
            Backend::Gf(p) => Some((0..*p).map(|r| FieldValue::Gf(Gf::from_residue(r, *p))).collect()),
            _ => None,
        }
    }

    /// Parses a literal: `p/q` or an integer; dyadic also accepts the named
    /// streams `hard-zero` and `pi`.
    pub fn parse_value(&self, s: &str) -> Result<FieldValue, FieldError> {
        let s = s.trim();
        if let Backend::Dyadic { default_budget } = self {
            match s {
                "hard-zero" => return Ok(FieldValue::Dyadic(DyadicReal::hard_zero(*default_budget))),
                "pi" => return Ok(FieldValue::Dyadic(DyadicReal::pi(*default_budget))),
                _ => {}
            }
        }
        let r = parse_rational(s)?;
        self.from_rational(&r)
    }
}

pub fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let err = || FieldError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| err())?;
            let d: BigInt = d.trim().parse().map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.trim().parse().map_err(|_| err())?)),
    }
}

/// Evidence that two values are apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ApartWitness {
    /// Rational backend: the exact distance `|a - b|`.
    Gap(BigRational),
    /// GF(p): the nonzero residue of `a - b`.
    Residue { residue: u64, modulus: u64 },
    /// Dyadic backend: intervals at `precision` are `gap` apart.
    Interval { gap: BigRational, precision: u32 },
}

impl ApartWitness {
    /// Positive lower bound on the separation, where one exists.
    pub fn lower_bound(&self) -> Option<&BigRational> {
        match self {
            ApartWitness::Gap(g) | ApartWitness::Interval { gap: g, .. } => Some(g),
            ApartWitness::Residue { .. } => None,
        }
    }
}

impl fmt::Display for ApartWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ApartWitness::Gap(g) => write!(f, "gap {g}"),
            ApartWitness::Residue { residue, modulus } => write!(f, "residue {residue} mod {modulus}"),
            ApartWitness::Interval { gap, precision } => write!(f, "gap {gap} at precision {precision}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Apartness {
    Apart(ApartWitness),
    /// Only the decidable backends answer this.
    NotApart,
    Undecided(u32),
}

impl Apartness {
    pub fn witness(&self) -> Option<&ApartWitness> {
        match self {
            Apartness::Apart(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_apart(&self) -> bool {
        matches!(self, Apartness::Apart(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CotransChoice {
    /// `z` is apart from `x`.
    FirstApart(ApartWitness),
    /// `z` is apart from `y`.
    SecondApart(ApartWitness),
}

/// Result of searching a list of values for one apart from zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Race {
    Found(usize, ApartWitness),
    /// Every value is zero (decidable backends only).
    NoneApart,
    Undecided(u32),
}

/// Hashable exact value, available on the decidable backends.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ValueKey {
    Rational(BigRational),
    Gf(u64, u64),
}

#[derive(Clone, Debug)]
pub enum FieldValue {
    Rational(BigRational),
    Gf(Gf),
    Dyadic(DyadicReal),
}

impl From<BigRational> for FieldValue {
    fn from(r: BigRational) -> Self {
        FieldValue::Rational(r)
    }
}

impl From<Gf> for FieldValue {
    fn from(g: Gf) -> Self {
        FieldValue::Gf(g)
    }
}

impl From<DyadicReal> for FieldValue {
    fn from(d: DyadicReal) -> Self {
        FieldValue::Dyadic(d)
    }
}

impl FieldValue {
    pub fn rational(n: i64, d: i64) -> Self {
        FieldValue::Rational(BigRational::new(n.into(), d.into()))
    }

    pub fn kind(&self) -> FieldKind {
        match self {
            FieldValue::Rational(_) => FieldKind::Rational,
            FieldValue::Gf(g) => FieldKind::Gf(g.modulus()),
            FieldValue::Dyadic(_) => FieldKind::Dyadic,
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            FieldValue::Rational(_) => Backend::Rational,
            FieldValue::Gf(g) => Backend::Gf(g.modulus()),
            FieldValue::Dyadic(d) => Backend::Dyadic {
                default_budget: d.default_budget(),
            },
        }
    }

    pub fn is_decidable(&self) -> bool {
        !matches!(self, FieldValue::Dyadic(_))
    }

    pub fn same_kind(&self, other: &Self) -> Result<(), FieldError> {
        if self.kind() == other.kind() {
            Ok(())
        } else {
            Err(FieldError::BackendMismatch {
                left: self.kind(),
                right: other.kind(),
            })
        }
    }

    pub fn zero_like(&self) -> Self {
        self.backend().zero()
    }

    pub fn one_like(&self) -> Self {
        self.backend().one()
    }

    fn binary(
        &self,
        other: &Self,
        rat: impl Fn(&BigRational, &BigRational) -> BigRational,
        gf: impl Fn(Gf, Gf) -> Gf,
        dy: impl Fn(&DyadicReal, &DyadicReal) -> DyadicReal,
    ) -> Result<Self, FieldError> {
        match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => Ok(FieldValue::Rational(rat(a, b))),
            (FieldValue::Gf(a), FieldValue::Gf(b)) if a.modulus() == b.modulus() => Ok(FieldValue::Gf(gf(*a, *b))),
            (FieldValue::Dyadic(a), FieldValue::Dyadic(b)) => Ok(FieldValue::Dyadic(dy(a, b))),
            _ => Err(FieldError::BackendMismatch {
                left: self.kind(),
                right: other.kind(),
            }),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.binary(other, |a, b| a + b, Gf::add, DyadicReal::add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.binary(other, |a, b| a - b, Gf::sub, DyadicReal::sub)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.binary(other, |a, b| a * b, Gf::mul, DyadicReal::mul)
    }

    pub fn max(&self, other: &Self) -> Result<Self, FieldError> {
        self.binary(other, |a, b| a.max(b).clone(), |a, b| a.max(b), DyadicReal::max)
    }

    pub fn min(&self, other: &Self) -> Result<Self, FieldError> {
        self.binary(other, |a, b| a.min(b).clone(), |a, b| a.min(b), DyadicReal::min)
    }

    fn resolve_budget(&self, other: &Self, budget: Option<Budget>) -> u32 {
        budget.map(Budget::get).unwrap_or_else(|| match (self, other) {
            (FieldValue::Dyadic(a), FieldValue::Dyadic(b)) => a.default_budget().min(b.default_budget()),
            _ => 0,
        })
    }

    /// Decides `self ≠ other` where the backend allows it.
    pub fn apart(&self, other: &Self, budget: Option<Budget>) -> Result<Apartness, FieldError> {
        self.same_kind(other)?;
        let budget = self.resolve_budget(other, budget);
        Ok(match (self, other) {
            (FieldValue::Rational(a), FieldValue::Rational(b)) => {
                let d = (a - b).abs();
                if d.is_zero() {
                    Apartness::NotApart
                } else {
                    Apartness::Apart(ApartWitness::Gap(d))
                }
            }
            (FieldValue::Gf(a), FieldValue::Gf(b)) => {
                let d = a.sub(*b);
                if d.residue() == 0 {
                    Apartness::NotApart
                } else {
                    Apartness::Apart(ApartWitness::Residue {
                        residue: d.residue(),
                        modulus: d.modulus(),
                    })
                }
            }
            (FieldValue::Dyadic(a), FieldValue::Dyadic(b)) => match a.separation(b, budget) {
                Some((precision, gap)) => Apartness::Apart(ApartWitness::Interval { gap, precision }),
                None => Apartness::Undecided(budget),
            },
            _ => unreachable!("kinds checked above"),
        })
    }

    pub fn apart_zero(&self, budget: Option<Budget>) -> Result<Apartness, FieldError> {
        self.apart(&self.zero_like(), budget)
    }

    /// Checks a witness against `self` and `other`.
    pub fn verify_apart(&self, other: &Self, witness: &ApartWitness) -> bool {
        if self.kind() != other.kind() {
            return false;
        }
        match (self, other, witness) {
            (FieldValue::Rational(a), FieldValue::Rational(b), ApartWitness::Gap(g)) => {
                g.is_positive() && (a - b).abs() == *g
            }
            (FieldValue::Gf(a), FieldValue::Gf(b), ApartWitness::Residue { residue, modulus }) => {
                let d = a.sub(*b);
                *residue != 0 && d.modulus() == *modulus && d.residue() == *residue
            }
            (FieldValue::Dyadic(a), FieldValue::Dyadic(b), ApartWitness::Interval { gap, precision }) => {
                let g = a.interval(*precision).gap(&b.interval(*precision));
                g.is_positive() && g == *gap
            }
            _ => false,
        }
    }

    pub fn verify_apart_zero(&self, witness: &ApartWitness) -> bool {
        self.verify_apart(&self.zero_like(), witness)
    }

    /// Given `x ≠ y` (with its witness), decides which of `x`, `y` is apart from `z`.
    pub fn cotrans(x: &Self, y: &Self, z: &Self, xy: &ApartWitness) -> Result<CotransChoice, FieldError> {
        x.same_kind(y)?;
        x.same_kind(z)?;
        if !x.verify_apart(y, xy) {
            return Err(FieldError::MissingWitness);
        }
        match (x, y, z) {
            (FieldValue::Dyadic(dx), FieldValue::Dyadic(dy), FieldValue::Dyadic(dz)) => {
                let ApartWitness::Interval { gap, precision } = xy else {
                    return Err(FieldError::MissingWitness);
                };
                // z is at least gap/2 from one of x, y; intervals of radius
                // ¾·2^-q separate it once 3·2^-q < gap/2.
                let mut q = *precision;
                let mut limit = *precision;
                while dyadic::pow2_neg(limit) * BigRational::from_integer(6.into()) >= *gap {
                    limit += 1;
                }
                loop {
                    let iz = dz.interval(q);
                    let gx = iz.gap(&dx.interval(q));
                    if gx.is_positive() {
                        return Ok(CotransChoice::FirstApart(ApartWitness::Interval { gap: gx, precision: q }));
                    }
                    let gy = iz.gap(&dy.interval(q));
                    if gy.is_positive() {
                        return Ok(CotransChoice::SecondApart(ApartWitness::Interval { gap: gy, precision: q }));
                    }
                    if q >= limit {
                        // Unreachable for sound approximations.
                        return Err(FieldError::MissingWitness);
                    }
                    q += 1;
                }
            }
            _ => match z.apart(x, None)? {
                Apartness::Apart(w) => Ok(CotransChoice::FirstApart(w)),
                _ => match z.apart(y, None)? {
                    Apartness::Apart(w) => Ok(CotransChoice::SecondApart(w)),
                    _ => Err(FieldError::MissingWitness),
                },
            },
        }
    }

    /// Multiplicative inverse; zero is rejected on the decidable backends and
    /// left undecided on the dyadic one.
    pub fn inv(&self, budget: Option<Budget>) -> Result<Self, FieldError> {
        match self.apart_zero(budget)? {
            Apartness::Apart(w) => self.inv_witnessed(&w),
            Apartness::NotApart => Err(FieldError::NotInvertible),
            Apartness::Undecided(budget) => Err(FieldError::Undecided { budget }),
        }
    }

    /// Inverse given a witness that `self` is apart from zero.
    pub fn inv_witnessed(&self, witness: &ApartWitness) -> Result<Self, FieldError> {
        if !self.verify_apart_zero(witness) {
            return Err(FieldError::MissingWitness);
        }
        match (self, witness) {
            (FieldValue::Rational(a), _) => Ok(FieldValue::Rational(a.recip())),
            (FieldValue::Gf(a), _) => a.inv().map(FieldValue::Gf).ok_or(FieldError::NotInvertible),
            (FieldValue::Dyadic(a), ApartWitness::Interval { precision, .. }) => a
                .inv_at(*precision)
                .map(FieldValue::Dyadic)
                .ok_or(FieldError::MissingWitness),
            _ => Err(FieldError::MissingWitness),
        }
    }

    /// Witness for a value known to satisfy `|self| ≥ bound > 0`. On the
    /// dyadic backend the search runs to the precision the bound guarantees.
    pub fn apart_zero_given_bound(&self, bound: &BigRational) -> Result<ApartWitness, FieldError> {
        let budget = match self {
            FieldValue::Dyadic(_) => {
                if !bound.is_positive() {
                    return Err(FieldError::MissingWitness);
                }
                // Intervals have radius ≤ 2^-q and lie within 2^-q of the
                // value, so a gap appears once 2·2^-q < |self|.
                let mut q = 1;
                while dyadic::pow2_neg(q - 1) >= *bound {
                    q += 1;
                }
                Some(Budget(q))
            }
            _ => None,
        };
        match self.apart_zero(budget)? {
            Apartness::Apart(w) => Ok(w),
            Apartness::NotApart => Err(FieldError::NotInvertible),
            Apartness::Undecided(_) => Err(FieldError::MissingWitness),
        }
    }

    /// Upper bound on `|self|` for the dyadic backend; exact on the others.
    pub fn abs_upper_bound(&self) -> BigRational {
        match self {
            FieldValue::Rational(r) => r.abs(),
            FieldValue::Gf(g) => BigRational::from_integer(BigInt::from(g.residue())),
            FieldValue::Dyadic(d) => {
                let i = d.interval(0);
                i.lo().abs().max(i.hi().abs())
            }
        }
    }

    /// Positive lower bound on `|self|` implied by a zero-apartness witness.
    /// GF(p) has no metric; it gets 1, which [`Self::apart_zero_given_bound`] ignores.
    pub fn abs_lower_bound(&self, witness: &ApartWitness) -> Option<BigRational> {
        if !self.verify_apart_zero(witness) {
            return None;
        }
        Some(witness.lower_bound().cloned().unwrap_or_else(BigRational::one))
    }

    /// Exact equality where decidable.
    pub fn exact_eq(&self, other: &Self) -> Option<bool> {
        match (self.key(), other.key()) {
            (Some(a), Some(b)) => Some(a == b),
            _ => None,
        }
    }

    pub fn is_zero_exact(&self) -> Option<bool> {
        self.exact_eq(&self.zero_like())
    }

    pub fn key(&self) -> Option<ValueKey> {
        match self {
            FieldValue::Rational(r) => Some(ValueKey::Rational(r.clone())),
            FieldValue::Gf(g) => Some(ValueKey::Gf(g.residue(), g.modulus())),
            FieldValue::Dyadic(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            FieldValue::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_dyadic(&self) -> Option<&DyadicReal> {
        match self {
            FieldValue::Dyadic(d) => Some(d),
            _ => None,
        }
    }

    /// JSON form: rationals as `"p/q"` strings, GF values as integers,
    /// dyadic reals as their label.
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            FieldValue::Rational(r) => serde_json::Value::String(r.to_string()),
            FieldValue::Gf(g) => serde_json::Value::from(g.residue()),
            FieldValue::Dyadic(d) => serde_json::Value::String(d.describe()),
        }
    }

    pub fn from_json(backend: &Backend, v: &serde_json::Value) -> Result<Self, FieldError> {
        match v {
            serde_json::Value::String(s) => backend.parse_value(s),
            serde_json::Value::Number(n) => match n.as_i64() {
                Some(i) => Ok(backend.int(i)),
                None => Err(FieldError::Parse(n.to_string())),
            },
            other => Err(FieldError::Parse(other.to_string())),
        }
    }
}

impl fmt::Display for FieldValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldValue::Rational(r) => write!(f, "{r}"),
            FieldValue::Gf(g) => write!(f, "{g}"),
            FieldValue::Dyadic(d) => write!(f, "{}", d.describe()),
        }
    }
}

// Operator forms panic on mismatched backends; the `try_*` methods report it.
macro_rules! forward_op {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&FieldValue> for &FieldValue {
            type Output = FieldValue;
            fn $method(self, rhs: &FieldValue) -> FieldValue {
                self.$try(rhs).expect("field backend mismatch")
            }
        }
        impl $tr<FieldValue> for FieldValue {
            type Output = FieldValue;
            fn $method(self, rhs: FieldValue) -> FieldValue {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for &FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        match self {
            FieldValue::Rational(r) => FieldValue::Rational(-r),
            FieldValue::Gf(g) => FieldValue::Gf(g.neg()),
            FieldValue::Dyadic(d) => FieldValue::Dyadic(d.neg()),
        }
    }
}

impl Neg for FieldValue {
    type Output = FieldValue;
    fn neg(self) -> FieldValue {
        -&self
    }
}

/// Looks for the first value apart from zero, raising the precision for all
/// of them in lockstep so that a later value is not starved by an earlier
/// undecidable one.
pub fn race_apart_zero(values: &[&FieldValue], budget: Option<Budget>) -> Result<Race, FieldError> {
    let Some(first) = values.first() else {
        return Ok(Race::NoneApart);
    };
    for v in values {
        first.same_kind(v)?;
    }
    if first.is_decidable() {
        for (i, v) in values.iter().enumerate() {
            if let Apartness::Apart(w) = v.apart_zero(None)? {
                return Ok(Race::Found(i, w));
            }
        }
        return Ok(Race::NoneApart);
    }
    let budget = budget.map(Budget::get).unwrap_or_else(|| {
        values
            .iter()
            .filter_map(|v| v.as_dyadic().map(DyadicReal::default_budget))
            .min()
            .unwrap_or(0)
    });
    let zero = first.zero_like();
    let zero = zero.as_dyadic().expect("dyadic kind");
    for q in 0..=budget {
        let iz = zero.interval(q);
        for (i, v) in values.iter().enumerate() {
            let d = v.as_dyadic().expect("dyadic kind");
            let gap = d.interval(q).gap(&iz);
            if gap.is_positive() {
                return Ok(Race::Found(i, ApartWitness::Interval { gap, precision: q }));
            }
        }
    }
    Ok(Race::Undecided(budget))
}
