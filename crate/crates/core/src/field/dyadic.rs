//! Budgeted real numbers given by dyadic approximations.
//!
//! A [`DyadicReal`] is a pure function from a precision `q` to a dyadic
//! rational `a_q` with `|a_q - x| <= 2^-(q+2)`. The public interval at
//! precision `q` is centred at `a_q` with radius `¾·2^-q`; with that radius
//! consecutive intervals nest, every interval contains `x`, and the radius
//! never exceeds `2^-q`.
//!
//! Equality of two such reals cannot be decided, so nothing here ever reports
//! that two values are equal: apartness is found at some precision or the
//! budget runs out.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

type Approx = dyn Fn(u32) -> BigRational + Send + Sync;

/// Closed interval `[center - radius, center + radius]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub center: BigRational,
    pub radius: BigRational,
}

impl Interval {
    pub fn lo(&self) -> BigRational {
        &self.center - &self.radius
    }

    pub fn hi(&self) -> BigRational {
        &self.center + &self.radius
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        self.lo() <= *x && *x <= self.hi()
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo() <= other.lo() && other.hi() <= self.hi()
    }

    /// Distance between the two intervals; zero when they overlap or touch.
    pub fn gap(&self, other: &Interval) -> BigRational {
        let d = (&self.center - &other.center).abs() - &self.radius - &other.radius;
        if d.is_positive() {
            d
        } else {
            BigRational::zero()
        }
    }
}

pub(crate) fn pow2(k: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << k)
}

pub(crate) fn pow2_neg(k: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << k)
}

/// Rounds to the nearest multiple of `2^-bits` (ties upward).
pub(crate) fn round_dyadic(r: &BigRational, bits: u32) -> BigRational {
    let scaled = r * pow2(bits);
    let twice: BigInt = scaled.numer() * 2 + scaled.denom();
    let den: BigInt = scaled.denom() * 2;
    let n = Integer::div_floor(&twice, &den);
    BigRational::new(n, BigInt::one() << bits)
}

/// Smallest `k >= 0` with `bound <= 2^k`.
fn log2_ceil(bound: &BigRational) -> u32 {
    let mut k = 0;
    while *bound > pow2(k) {
        k += 1;
    }
    k
}

#[derive(Clone)]
pub struct DyadicReal {
    approx: Arc<Approx>,
    default_budget: u32,
    label: Arc<str>,
}

impl fmt::Debug for DyadicReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DyadicReal")
            .field("label", &self.label)
            .field("default_budget", &self.default_budget)
            .finish()
    }
}

impl DyadicReal {
    /// Wraps an approximation function.
    ///
    /// The caller guarantees `|f(q) - x| <= 2^-(q+2)` for a single real `x`
    /// and that `f(q)` is a dyadic rational; `f` must be deterministic.
    pub fn from_fn<F>(label: &str, default_budget: u32, f: F) -> Self
    where
        F: Fn(u32) -> BigRational + Send + Sync + 'static,
    {
        DyadicReal {
            approx: Arc::new(f),
            default_budget,
            label: Arc::from(label),
        }
    }

    pub fn from_rational(r: BigRational, default_budget: u32) -> Self {
        let label = r.to_string();
        Self::from_fn(&label, default_budget, move |q| round_dyadic(&r, q + 2))
    }

    /// A stream whose interval contains zero at every precision, with
    /// centres alternating in sign. No finite budget separates it from 0.
    pub fn hard_zero(default_budget: u32) -> Self {
        Self::from_fn("hard-zero", default_budget, |q| {
            let mag = pow2_neg(q + 3);
            if q % 2 == 0 {
                mag
            } else {
                -mag
            }
        })
    }

    /// π by Machin's formula, `16·atan(1/5) - 4·atan(1/239)`.
    pub fn pi(default_budget: u32) -> Self {
        Self::from_fn("pi", default_budget, |q| {
            // Truncation loses at most a few ulps per series term; 24 guard
            // bits keep that far below 2^-(q+3).
            let bits = q + 24;
            let a = atan_inv(5, bits) * BigInt::from(16);
            let b = atan_inv(239, bits) * BigInt::from(4);
            let scaled = BigRational::new(a - b, BigInt::one() << bits);
            round_dyadic(&scaled, q + 3)
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// The label when short; otherwise an approximation to within 2^-30.
    pub fn describe(&self) -> String {
        if self.label.chars().count() <= 32 {
            return self.label.to_string();
        }
        let a = self.approx(30).to_f64().unwrap_or(f64::NAN);
        format!("≈{a:.9}")
    }

    pub fn default_budget(&self) -> u32 {
        self.default_budget
    }

    pub fn with_default_budget(mut self, budget: u32) -> Self {
        self.default_budget = budget;
        self
    }

    /// Raw approximation with error at most `2^-(q+2)`.
    pub fn approx(&self, q: u32) -> BigRational {
        (self.approx)(q)
    }

    pub fn interval(&self, q: u32) -> Interval {
        Interval {
            center: self.approx(q),
            radius: pow2_neg(q) * BigRational::new(BigInt::from(3), BigInt::from(4)),
        }
    }

    fn derived(&self, label: String, f: impl Fn(u32) -> BigRational + Send + Sync + 'static) -> Self {
        DyadicReal {
            approx: Arc::new(f),
            default_budget: self.default_budget,
            label: Arc::from(label.as_str()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        self.derived(format!("({} + {})", a.label, b.label), move |q| {
            a.approx(q + 1) + b.approx(q + 1)
        })
    }

    pub fn neg(&self) -> Self {
        let a = self.clone();
        self.derived(format!("-{}", a.label), move |q| -a.approx(q))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        // 2^ka bounds every approximation of a, likewise kb for b.
        let ka = log2_ceil(&(a.approx(0).abs() + &half));
        let kb = log2_ceil(&(b.approx(0).abs() + &half));
        self.derived(format!("({} * {})", a.label, b.label), move |q| {
            let prod = a.approx(q + 2 + kb) * b.approx(q + 2 + ka);
            round_dyadic(&prod, q + 3)
        })
    }

    /// Reciprocal, given a precision at which the interval excludes zero.
    ///
    /// Returns `None` if the interval at `precision` still meets zero.
    pub fn inv_at(&self, precision: u32) -> Option<Self> {
        let iv = self.interval(precision);
        let lower = iv.center.abs() - &iv.radius;
        if !lower.is_positive() {
            return None;
        }
        // Shift s with 2^-(s-2) <= m^2 and 2^-(s+2) <= m/2.
        let m_sq = &lower * &lower;
        let half_m = &lower / BigRational::from_integer(BigInt::from(2));
        let mut s = 0u32;
        while pow2_neg(s) * pow2(2) > m_sq || pow2_neg(s + 2) > half_m {
            s += 1;
        }
        let a = self.clone();
        Some(self.derived(format!("1/{}", a.label), move |q| {
            let x = a.approx(q + s);
            round_dyadic(&x.recip(), q + 3)
        }))
    }

    pub fn max(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        self.derived(format!("max({}, {})", a.label, b.label), move |q| {
            let (x, y) = (a.approx(q), b.approx(q));
            if x >= y {
                x
            } else {
                y
            }
        })
    }

    pub fn min(&self, other: &Self) -> Self {
        let (a, b) = (self.clone(), other.clone());
        self.derived(format!("min({}, {})", a.label, b.label), move |q| {
            let (x, y) = (a.approx(q), b.approx(q));
            if x <= y {
                x
            } else {
                y
            }
        })
    }

    /// First precision `q <= budget` at which the two intervals are disjoint.
    pub fn separation(&self, other: &Self, budget: u32) -> Option<(u32, BigRational)> {
        (0..=budget).find_map(|q| {
            let gap = self.interval(q).gap(&other.interval(q));
            gap.is_positive().then_some((q, gap))
        })
    }
}

/// `atan(1/n)` scaled by `2^bits`, truncated term by term.
fn atan_inv(n: u64, bits: u32) -> BigInt {
    let one = BigInt::one() << bits;
    let n = BigInt::from(n);
    let n_sq = &n * &n;
    let mut power = &one / &n;
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &n_sq;
        k += 1;
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn check_nesting(x: &DyadicReal, upto: u32) {
        for q in 0..upto {
            let outer = x.interval(q);
            let inner = x.interval(q + 1);
            assert!(outer.contains_interval(&inner), "{} at {q}", x.label());
            assert!(outer.radius <= pow2_neg(q));
        }
    }

    #[test]
    fn rounding() {
        assert_eq!(round_dyadic(&rat(1, 3), 2), rat(1, 4));
        assert_eq!(round_dyadic(&rat(-1, 3), 2), rat(-1, 4));
        assert_eq!(round_dyadic(&rat(3, 8), 2), rat(1, 2));
    }

    #[test]
    fn constants_nest_and_contain() {
        let third = DyadicReal::from_rational(rat(1, 3), 64);
        check_nesting(&third, 80);
        for q in 0..80 {
            assert!(third.interval(q).contains(&rat(1, 3)));
        }
        check_nesting(&DyadicReal::hard_zero(64), 80);
    }

    #[test]
    fn hard_zero_always_contains_zero() {
        let z = DyadicReal::hard_zero(64);
        for q in 0..300 {
            assert!(z.interval(q).contains(&BigRational::zero()));
        }
        let zero = DyadicReal::from_rational(BigRational::zero(), 64);
        assert_eq!(z.separation(&zero, 256), None);
    }

    #[test]
    fn pi_digits() {
        // 3.14159265358979323846264338327950288 truncated to 35 decimals.
        let lo = BigRational::new(
            "314159265358979323846264338327950288".parse().unwrap(),
            BigInt::from(10).pow(35),
        );
        let hi = &lo + BigRational::new(BigInt::one(), BigInt::from(10).pow(35));
        let pi = DyadicReal::pi(64);
        for q in [0, 5, 20, 60, 110] {
            let iv = pi.interval(q);
            assert!(iv.lo() <= lo && hi <= iv.hi(), "pi interval at {q}");
        }
        check_nesting(&pi, 70);
        let pi_plus_zero = pi.add(&DyadicReal::from_rational(BigRational::zero(), 64));
        for q in [0, 10, 100] {
            let iv = pi_plus_zero.interval(q);
            assert!(iv.lo() <= lo && hi <= iv.hi());
        }
    }

    #[test]
    fn arithmetic_tracks_exact_values() {
        let a = DyadicReal::from_rational(rat(7, 3), 64);
        let b = DyadicReal::from_rational(rat(-5, 11), 64);
        let cases = [
            (a.add(&b), rat(7, 3) + rat(-5, 11)),
            (a.sub(&b), rat(7, 3) - rat(-5, 11)),
            (a.mul(&b), rat(7, 3) * rat(-5, 11)),
            (a.mul(&a).mul(&a), rat(343, 27)),
            (b.inv_at(4).unwrap(), rat(-11, 5)),
            (a.max(&b), rat(7, 3)),
            (a.min(&b), rat(-5, 11)),
        ];
        for (x, exact) in cases {
            check_nesting(&x, 60);
            for q in 0..60 {
                assert!(x.interval(q).contains(&exact), "{} at {q}", x.label());
            }
        }
    }

    #[test]
    fn inverse_needs_zero_excluded() {
        let z = DyadicReal::hard_zero(64);
        assert!(z.inv_at(40).is_none());
        let tiny = DyadicReal::from_rational(rat(1, 1024), 64);
        // ¾·2^-8 exceeds 2^-10, ¾·2^-10 does not.
        assert!(tiny.inv_at(8).is_none());
        let r = tiny.inv_at(10).unwrap();
        assert!(r.interval(30).contains(&rat(1024, 1)));
    }

    #[test]
    fn determinism() {
        let x = DyadicReal::pi(64).mul(&DyadicReal::hard_zero(64));
        for q in [0, 7, 33] {
            assert_eq!(x.interval(q), x.interval(q));
        }
    }

    #[test]
    fn separation_precision_for_binary_gap() {
        let c = DyadicReal::from_rational(rat(1, 1024), 64);
        let zero = DyadicReal::from_rational(BigRational::zero(), 64);
        let (q, gap) = c.separation(&zero, 64).unwrap();
        assert_eq!(q, 11);
        assert_eq!(gap, rat(1, 4096));
        assert_eq!(c.separation(&zero, 10), None);
    }
}
