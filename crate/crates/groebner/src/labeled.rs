//! Labeled polynomials and the signature machinery.
//!
//! A labeled polynomial pairs a signature (a monomial, or zero for members
//! of the previous ideal) with a polynomial. The partial order [`h_compare`]
//! governs reductor eligibility, pair generation, and pruning; reduction is
//! head-only and must strictly lower the reductor's shifted signature below
//! the signature of the polynomial being reduced.

use std::cmp::Ordering;

use crate::algebra::{Monomial, Monomial0, Polynomial, Ring};

/// (signature, polynomial) pair, optionally carrying the cofactor witness
/// used by certified runs. The pair (zero, zero polynomial) is excluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledPolynomial {
    sig: Monomial0,
    poly: Polynomial,
    cofactor: Option<Polynomial>,
}

impl LabeledPolynomial {
    pub fn new(sig: Monomial0, poly: Polynomial) -> Self {
        assert!(
            !(sig.is_zero() && poly.is_zero()),
            "the zero-signature zero polynomial is excluded"
        );
        LabeledPolynomial {
            sig,
            poly,
            cofactor: None,
        }
    }

    pub fn with_cofactor(sig: Monomial0, poly: Polynomial, cofactor: Polynomial) -> Self {
        let mut h = Self::new(sig, poly);
        h.cofactor = Some(cofactor);
        h
    }

    #[inline]
    pub fn sig(&self) -> &Monomial0 {
        &self.sig
    }

    #[inline]
    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn head(&self) -> Monomial0 {
        self.poly.leading_monomial()
    }

    /// Head monomial as a plain monomial; None when the polynomial is zero.
    #[inline]
    pub fn head_mono(&self) -> Option<&Monomial> {
        self.poly.head().map(|t| &t.mono)
    }

    #[inline]
    pub fn cofactor(&self) -> Option<&Polynomial> {
        self.cofactor.as_ref()
    }
}

/// Outcome of comparing two labeled polynomials by their cross products
/// HM(p1)*sig2 versus HM(p2)*sig1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HOrdering {
    /// h1 is strictly below h2.
    FirstBelow,
    /// h1 is strictly above h2.
    FirstAbove,
    /// Equal nonzero cross products.
    Tied,
    /// Both cross products are zero.
    Incomparable,
}

/// Compares h1 against h2: FirstBelow iff HM(p1)*sig2 < HM(p2)*sig1 in the
/// zero-extended order. Elements with zero signature are never below
/// anything; elements with zero polynomial are never above anything.
pub fn h_compare(ring: &Ring, h1: &LabeledPolynomial, h2: &LabeledPolynomial) -> HOrdering {
    let order = ring.order();
    let left = cross(h1, h2);
    let right = cross(h2, h1);
    match (left, right) {
        (None, None) => HOrdering::Incomparable,
        (None, Some(_)) => HOrdering::FirstBelow,
        (Some(_), None) => HOrdering::FirstAbove,
        (Some((a1, b1)), Some((a2, b2))) => match order.cmp_mul(a1, b1, a2, b2) {
            Ordering::Less => HOrdering::FirstBelow,
            Ordering::Greater => HOrdering::FirstAbove,
            Ordering::Equal => HOrdering::Tied,
        },
    }
}

/// HM(pa)*sig_b as factors, or None when the product is zero.
fn cross<'a>(
    a: &'a LabeledPolynomial,
    b: &'a LabeledPolynomial,
) -> Option<(&'a Monomial, &'a Monomial)> {
    let head = a.head_mono()?;
    match b.sig() {
        Monomial0::Zero => None,
        Monomial0::Mono(s) => Some((head, s)),
    }
}

/// t * h = (t*sig, t*p); the cofactor, when present, scales along.
pub fn labeled_mul(ring: &Ring, t: &Monomial, h: &LabeledPolynomial) -> LabeledPolynomial {
    LabeledPolynomial {
        sig: h.sig.mul_mono(t),
        poly: ring.mul_monomial(&h.poly, t),
        cofactor: h.cofactor.as_ref().map(|u| ring.mul_monomial(u, t)),
    }
}

/// One signature-safe head reduction of h1 by t * h2.
///
/// Requires sig(h1) strictly above t*sig(h2) and equal nonzero heads; the
/// cancellation scalar is K = -HC(h1)/HC(h2), so the head strictly drops
/// while the signature is preserved.
pub fn sig_safe_reduce_step(
    ring: &Ring,
    h1: &LabeledPolynomial,
    h2: &LabeledPolynomial,
    t: &Monomial,
) -> LabeledPolynomial {
    let order = ring.order();
    let shifted_sig = h2.sig.mul_mono(t);
    assert_eq!(
        order.cmp0(&h1.sig, &shifted_sig),
        Ordering::Greater,
        "reductor signature must sit strictly below the signature being reduced"
    );
    let h1_head = h1.head_mono().expect("cannot reduce the zero polynomial");
    let h2_head = h2.head_mono().expect("reductor polynomial must be nonzero");
    assert_eq!(*h1_head, h2_head.mul(t), "heads must cancel exactly");

    // t is monic, so HC(t*h2) = HC(h2).
    let k = ring.field().neg(
        ring.field()
            .div(h1.poly.leading_coeff(), h2.poly.leading_coeff()),
    );
    let poly = ring.add_scaled(&h1.poly, k, t, &h2.poly);
    debug_assert_eq!(
        order.cmp0(&poly.leading_monomial(), &h1.head()),
        Ordering::Less,
        "head must strictly decrease"
    );
    let cofactor = match (&h1.cofactor, &h2.cofactor) {
        (Some(u1), Some(u2)) => Some(ring.add_scaled(u1, k, t, u2)),
        _ => None,
    };
    LabeledPolynomial {
        sig: h1.sig.clone(),
        poly,
        cofactor,
    }
}

/// A reductor for `current` must divide its head and win the strict order;
/// returns the multiplier on success.
fn eligible_multiplier(
    ring: &Ring,
    r: &LabeledPolynomial,
    current: &LabeledPolynomial,
) -> Option<Monomial> {
    let cur_head = current.head_mono()?;
    let r_head = r.head_mono()?;
    if !r_head.divides(cur_head) {
        return None;
    }
    if h_compare(ring, r, current) != HOrdering::FirstAbove {
        return None;
    }
    Some(cur_head.div(r_head))
}

/// Head-reduces `current` by elements of `reducers` while any is strictly
/// above it with a dividing head. Among the maximal eligible reductors,
/// ties fall to the smaller head, then to the lower index.
///
/// The signature never changes; the head strictly decreases every step, so
/// the loop terminates. `steps` accumulates the reduction count.
pub(crate) fn reduce_labeled(
    ring: &Ring,
    mut current: LabeledPolynomial,
    reducers: &[LabeledPolynomial],
    steps: &mut u64,
) -> LabeledPolynomial {
    loop {
        if current.poly.is_zero() {
            return current;
        }
        let eligible: Vec<usize> = reducers
            .iter()
            .enumerate()
            .filter(|(_, r)| eligible_multiplier(ring, r, &current).is_some())
            .map(|(i, _)| i)
            .collect();
        let Some(&chosen) = pick_maximal(ring, reducers, &eligible) else {
            return current;
        };
        let r = &reducers[chosen];
        let t = eligible_multiplier(ring, r, &current).unwrap();
        current = sig_safe_reduce_step(ring, &current, r, &t);
        *steps += 1;
    }
}

/// Index of the reductor to apply: a maximal element of the eligible set,
/// ties broken by smaller head monomial, then lower index.
fn pick_maximal<'a>(
    ring: &Ring,
    reducers: &[LabeledPolynomial],
    eligible: &'a [usize],
) -> Option<&'a usize> {
    eligible
        .iter()
        .filter(|&&i| {
            eligible
                .iter()
                .all(|&j| h_compare(ring, &reducers[i], &reducers[j]) != HOrdering::FirstBelow)
        })
        .min_by(|&&i, &&j| {
            let hi = reducers[i]
                .head_mono()
                .expect("eligible reductors are nonzero");
            let hj = reducers[j]
                .head_mono()
                .expect("eligible reductors are nonzero");
            ring.order().cmp(hi, hj).then(i.cmp(&j))
        })
}

/// Reduces p, tagged with signature `sigma`, by the labeled set `reducers`
/// until no eligible reductor remains; returns the final polynomial.
pub fn reduce_checking_signatures(
    ring: &Ring,
    sigma: &Monomial,
    p: &Polynomial,
    reducers: &[LabeledPolynomial],
) -> Polynomial {
    let current = LabeledPolynomial::new(Monomial0::Mono(sigma.clone()), p.clone());
    let mut steps = 0;
    reduce_labeled(ring, current, reducers, &mut steps).poly
}

/// True when some element of `reducers` could signature-safe reduce `h`.
pub(crate) fn has_reductor_for(
    ring: &Ring,
    sig: &Monomial0,
    head: &Monomial,
    reducers: &[LabeledPolynomial],
) -> bool {
    reducers.iter().any(|r| {
        let Some(r_head) = r.head_mono() else {
            return false;
        };
        if !r_head.divides(head) {
            return false;
        }
        // r above (sig, head): HM(r)*sig > head*sig(r).
        match (sig, r.sig()) {
            (Monomial0::Zero, _) => false,
            (Monomial0::Mono(_), Monomial0::Zero) => true,
            (Monomial0::Mono(s), Monomial0::Mono(rs)) => {
                ring.order().cmp_mul(r_head, s, head, rs) == Ordering::Greater
            }
        }
    })
}
