//! Exponent-vector monomials and the monoid extended by an absorbing zero.

use std::fmt;

/// A monomial in n variables, stored as an exponent vector. The variable
/// count is fixed by the ring context; all binary operations require equal
/// lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(
            index < nvars,
            "variable index {index} out of range for {nvars} variables"
        );
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Monomial { exps }
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Total degree. Exponents are u32 and variable counts are small, so the
    /// u64 accumulator cannot overflow.
    #[inline]
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    /// Componentwise exponent sum. Panics on per-variable exponent overflow;
    /// silent wraparound would corrupt every order comparison downstream.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
            .collect();
        Monomial { exps }
    }

    /// True when `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// self / divisor. Panics when the division is not exact.
    pub fn div(&self, divisor: &Monomial) -> Monomial {
        assert!(
            divisor.divides(self),
            "monomial division is not exact: {divisor:?} does not divide {self:?}"
        );
        let exps = self
            .exps
            .iter()
            .zip(&divisor.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Monomial { exps }
    }

    /// Componentwise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.exps.len(), other.exps.len(), "variable count mismatch");
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    /// True when the supports are disjoint (the lcm equals the product).
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }
}

/// The monomial monoid with an absorbing zero adjoined. Zero is the strict
/// minimum of every extended order and is divisible by everything.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Monomial0 {
    Zero,
    Mono(Monomial),
}

impl Monomial0 {
    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Monomial0::Zero)
    }

    /// The underlying monomial; panics on Zero.
    pub fn expect_mono(&self) -> &Monomial {
        match self {
            Monomial0::Zero => panic!("expected a nonzero monomial"),
            Monomial0::Mono(m) => m,
        }
    }

    /// Product in the extended monoid: zero absorbs.
    pub fn mul(&self, other: &Monomial0) -> Monomial0 {
        match (self, other) {
            (Monomial0::Zero, _) | (_, Monomial0::Zero) => Monomial0::Zero,
            (Monomial0::Mono(a), Monomial0::Mono(b)) => Monomial0::Mono(a.mul(b)),
        }
    }

    pub fn mul_mono(&self, t: &Monomial) -> Monomial0 {
        match self {
            Monomial0::Zero => Monomial0::Zero,
            Monomial0::Mono(a) => Monomial0::Mono(a.mul(t)),
        }
    }

    /// Divisibility with a zero: `t * 0 = 0` witnesses that everything
    /// divides zero, while zero divides only zero.
    pub fn divides(&self, other: &Monomial0) -> bool {
        match (self, other) {
            (_, Monomial0::Zero) => true,
            (Monomial0::Zero, Monomial0::Mono(_)) => false,
            (Monomial0::Mono(a), Monomial0::Mono(b)) => a.divides(b),
        }
    }
}

impl From<Monomial> for Monomial0 {
    fn from(m: Monomial) -> Self {
        Monomial0::Mono(m)
    }
}

impl fmt::Display for Monomial {
    /// Debug-friendly rendering with generic variable names x0, x1, ...
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}
