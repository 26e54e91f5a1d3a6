//! Monomial orders: graded reverse lexicographic and lexicographic.
//!
//! Variable index 0 is the greatest variable in both orders.

use std::cmp::Ordering;

use super::monomial::{Monomial, Monomial0};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    GrevLex,
    Lex,
}

impl MonomialOrder {
    /// Total order on monomials of equal variable count.
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ae, be) = (a.exps(), b.exps());
        assert_eq!(ae.len(), be.len(), "variable count mismatch");
        match self {
            MonomialOrder::GrevLex => {
                match a.degree().cmp(&b.degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // Equal degree: scanning from the last variable, the first
                // difference decides, and the smaller exponent wins.
                for i in (0..ae.len()).rev() {
                    match ae[i].cmp(&be[i]) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..ae.len() {
                    match ae[i].cmp(&be[i]) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Extension to the monoid with zero: zero is strictly minimal.
    pub fn cmp0(self, a: &Monomial0, b: &Monomial0) -> Ordering {
        match (a, b) {
            (Monomial0::Zero, Monomial0::Zero) => Ordering::Equal,
            (Monomial0::Zero, Monomial0::Mono(_)) => Ordering::Less,
            (Monomial0::Mono(_), Monomial0::Zero) => Ordering::Greater,
            (Monomial0::Mono(a), Monomial0::Mono(b)) => self.cmp(a, b),
        }
    }

    /// Compares a1*b1 against a2*b2 without materializing the products.
    ///
    /// This is the kernel of every signature comparison, so it avoids the
    /// two allocations a naive `mul` + `cmp` would make. u64 accumulators
    /// make per-component sums overflow-free.
    pub fn cmp_mul(self, a1: &Monomial, b1: &Monomial, a2: &Monomial, b2: &Monomial) -> Ordering {
        let n = a1.exps().len();
        assert!(
            b1.exps().len() == n && a2.exps().len() == n && b2.exps().len() == n,
            "variable count mismatch"
        );
        let e = |m: &[u32], i: usize| m[i] as u64;
        let (l1, r1, l2, r2) = (a1.exps(), b1.exps(), a2.exps(), b2.exps());
        match self {
            MonomialOrder::GrevLex => {
                let d1 = a1.degree() + b1.degree();
                let d2 = a2.degree() + b2.degree();
                match d1.cmp(&d2) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                for i in (0..n).rev() {
                    match (e(l1, i) + e(r1, i)).cmp(&(e(l2, i) + e(r2, i))) {
                        Ordering::Equal => {}
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::Lex => {
                for i in 0..n {
                    match (e(l1, i) + e(r1, i)).cmp(&(e(l2, i) + e(r2, i))) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }
}
