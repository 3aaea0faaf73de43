//! Prime fields GF(p) with p ≤ 2³¹.

use std::fmt;

use super::FieldError;

/// Largest admissible modulus.
pub const MAX_MODULUS: u64 = 1 << 31;

/// Residue class modulo a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf {
    residue: u64,
    modulus: u64,
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn check_modulus(p: u64) -> Result<(), FieldError> {
    if p > MAX_MODULUS {
        return Err(FieldError::ModulusTooLarge(p));
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    Ok(())
}

impl Gf {
    /// Reduces `value` modulo `p`, checking that `p` is an admissible prime.
    pub fn new(value: i64, p: u64) -> Result<Self, FieldError> {
        check_modulus(p)?;
        Ok(Self::reduce(value, p))
    }

    /// Reduction without the primality check; `p` must already be validated.
    pub(crate) fn reduce(value: i64, p: u64) -> Self {
        let m = p as i128;
        let r = ((value as i128 % m) + m) % m;
        Gf {
            residue: r as u64,
            modulus: p,
        }
    }

    pub(crate) fn from_residue(residue: u64, p: u64) -> Self {
        Gf {
            residue: residue % p,
            modulus: p,
        }
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn add(self, other: Self) -> Self {
        Gf::from_residue(self.residue + other.residue, self.modulus)
    }

    pub fn sub(self, other: Self) -> Self {
        Gf::from_residue(self.residue + self.modulus - other.residue, self.modulus)
    }

    pub fn mul(self, other: Self) -> Self {
        Gf::from_residue(self.residue * other.residue, self.modulus)
    }

    pub fn neg(self) -> Self {
        Gf::from_residue(self.modulus - self.residue, self.modulus)
    }

    /// Inverse by Fermat's little theorem; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.residue == 0 {
            return None;
        }
        let mut base = self.residue;
        let mut exp = self.modulus - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % self.modulus;
            }
            base = base * base % self.modulus;
            exp >>= 1;
        }
        Some(Gf::from_residue(acc, self.modulus))
    }
}

impl fmt::Display for Gf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(2_147_483_647));
    }

    #[test]
    fn modulus_limits() {
        assert_eq!(Gf::new(1, 4), Err(FieldError::NotPrime(4)));
        assert_eq!(
            Gf::new(1, (1 << 31) + 11),
            Err(FieldError::ModulusTooLarge((1 << 31) + 11))
        );
        assert_eq!(Gf::new(-1, 5).unwrap().residue(), 4);
    }

    #[test]
    fn inverse_matches_brute_force() {
        for p in [2u64, 3, 5, 7, 13] {
            for a in 1..p {
                let x = Gf::from_residue(a, p);
                let brute = (1..p).find(|b| a * b % p == 1).unwrap();
                assert_eq!(x.inv().unwrap().residue(), brute);
            }
            assert!(Gf::from_residue(0, p).inv().is_none());
        }
    }
}
