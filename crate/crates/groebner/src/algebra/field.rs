//! Exact arithmetic in the prime field Z/p.
//!
//! The modulus is carried by [`PrimeField`], a run-level context; elements
//! store only their canonical residue in `[0, p)`.

use thiserror::Error;

/// A canonical residue modulo the context prime. Arithmetic goes through
/// [`PrimeField`]; elements from different contexts must not be mixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported bound 2^31")]
    TooLarge(u64),
}

/// The field Z/p for a machine-word prime p.
///
/// Keeping p below 2^31 lets products of two residues fit in a u64 without
/// widening, and makes the trial-division primality check instant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    modulus: u64,
}

const MAX_MODULUS: u64 = 1 << 31;

fn is_prime(n: u64) -> bool {
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

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self, FieldError> {
        if modulus >= MAX_MODULUS {
            return Err(FieldError::TooLarge(modulus));
        }
        if !is_prime(modulus) {
            return Err(FieldError::NotPrime(modulus));
        }
        Ok(PrimeField { modulus })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Canonical residue of an arbitrary unsigned integer.
    #[inline]
    pub fn from_u64(&self, n: u64) -> FieldElement {
        FieldElement(n % self.modulus)
    }

    /// Canonical residue of a signed integer.
    #[inline]
    pub fn from_i64(&self, n: i64) -> FieldElement {
        let p = self.modulus as i64;
        FieldElement(n.rem_euclid(p) as u64)
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement(1 % self.modulus)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.modulus {
            s - self.modulus
        } else {
            s
        })
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.modulus - b.0
        })
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.modulus - a.0 })
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 * b.0 % self.modulus)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    ///
    /// Panics when `a` is zero.
    pub fn inv(&self, a: FieldElement) -> FieldElement {
        assert!(!a.is_zero(), "inverse of zero in F_{}", self.modulus);
        let (mut r0, mut r1) = (self.modulus as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1, "gcd(a, p) = 1 for prime p and a != 0");
        self.from_i64(t0)
    }

    /// a / b, i.e. a * inv(b).
    #[inline]
    pub fn div(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.mul(a, self.inv(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_non_primes() {
        assert_eq!(PrimeField::new(4), Err(FieldError::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
        assert_eq!(PrimeField::new(0), Err(FieldError::NotPrime(0)));
        assert!(PrimeField::new(1 << 32).is_err());
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn inverse_mod_7() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.inv(f.from_u64(2)), f.from_u64(4));
    }

    #[test]
    fn add_wraps_to_zero() {
        let f = PrimeField::new(32003).unwrap();
        assert_eq!(f.add(f.from_u64(32002), f.from_u64(1)), f.zero());
    }

    #[test]
    fn mul_by_inverse_is_one() {
        let f = PrimeField::new(32003).unwrap();
        let a = f.from_u64(12345);
        assert_eq!(f.mul(a, f.inv(a)), f.one());
    }

    #[test]
    #[should_panic(expected = "inverse of zero")]
    fn inverse_of_zero_panics() {
        let f = PrimeField::new(7).unwrap();
        f.inv(FieldElement::ZERO);
    }

    #[test]
    fn negative_residues_are_canonical() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.from_i64(-3), f.from_u64(4));
        assert_eq!(f.from_i64(-7), f.zero());
    }

    #[test]
    fn field_axioms_sampled() {
        for p in [7u64, 101, 32003] {
            let f = PrimeField::new(p).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(0xF1E1D);
            for _ in 0..200 {
                let a = f.from_u64(rng.next_u64());
                let b = f.from_u64(rng.next_u64());
                let c = f.from_u64(rng.next_u64());
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a)), f.one());
                }
            }
        }
    }
}
