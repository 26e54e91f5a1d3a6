//! Sparse multivariate polynomials with terms kept strictly decreasing in
//! the ring's monomial order. The empty term list is the zero polynomial.

use std::cmp::Ordering;

use super::field::FieldElement;
use super::monomial::{Monomial, Monomial0};
use super::Ring;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: FieldElement,
    pub mono: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// (HM, HC); the zero polynomial yields (Zero, 0).
    pub fn leading(&self) -> (Monomial0, FieldElement) {
        match self.terms.first() {
            None => (Monomial0::Zero, FieldElement::ZERO),
            Some(t) => (Monomial0::Mono(t.mono.clone()), t.coeff),
        }
    }

    pub fn leading_monomial(&self) -> Monomial0 {
        match self.terms.first() {
            None => Monomial0::Zero,
            Some(t) => Monomial0::Mono(t.mono.clone()),
        }
    }

    /// Leading term without cloning; None for zero.
    #[inline]
    pub fn head(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> FieldElement {
        self.terms.first().map_or(FieldElement::ZERO, |t| t.coeff)
    }

    /// Maximal total degree over the terms; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|t| t.mono.degree())
            .max()
            .unwrap_or(0)
    }

    /// True for a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    /// Representation invariant: nonzero coefficients, strictly decreasing
    /// monomials. Called under debug assertions by the constructors.
    pub fn is_valid(&self, ring: &Ring) -> bool {
        self.terms
            .iter()
            .all(|t| !t.coeff.is_zero() && t.mono.nvars() == ring.nvars())
            && self
                .terms
                .windows(2)
                .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }
}

impl Ring {
    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs:
    /// sorts, merges duplicates, drops zeros.
    pub fn polynomial(&self, terms: Vec<(FieldElement, Monomial)>) -> Polynomial {
        let mut terms: Vec<Term> = terms
            .into_iter()
            .map(|(coeff, mono)| Term { coeff, mono })
            .collect();
        terms.sort_by(|a, b| self.order().cmp(&b.mono, &a.mono));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = self.field().add(last.coeff, t.coeff);
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                }
                _ => {
                    if !t.coeff.is_zero() {
                        merged.push(t);
                    }
                }
            }
        }
        let p = Polynomial { terms: merged };
        debug_assert!(p.is_valid(self));
        p
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: vec![Term {
                    coeff: c,
                    mono: Monomial::one(self.nvars()),
                }],
            }
        }
    }

    /// p + K * t * q as a linear-time merge of the two sorted term lists.
    pub fn add_scaled(
        &self,
        p: &Polynomial,
        k: FieldElement,
        t: &Monomial,
        q: &Polynomial,
    ) -> Polynomial {
        if k.is_zero() || q.is_zero() {
            return p.clone();
        }
        let field = self.field();
        let order = self.order();
        let mut out = Vec::with_capacity(p.terms.len() + q.terms.len());
        let mut pi = p.terms.iter().peekable();
        let mut qi = q.terms.iter().peekable();
        let mut scaled_q: Option<Term> = None;
        loop {
            if scaled_q.is_none() {
                scaled_q = qi.next().map(|tq| Term {
                    coeff: field.mul(k, tq.coeff),
                    mono: tq.mono.mul(t),
                });
            }
            enum Step {
                TakeP,
                TakeQ,
                Merge,
            }
            let step = match (pi.peek(), &scaled_q) {
                (None, None) => break,
                (Some(_), None) => Step::TakeP,
                (None, Some(_)) => Step::TakeQ,
                (Some(tp), Some(tq)) => match order.cmp(&tp.mono, &tq.mono) {
                    Ordering::Greater => Step::TakeP,
                    Ordering::Less => Step::TakeQ,
                    Ordering::Equal => Step::Merge,
                },
            };
            match step {
                Step::TakeP => out.push(pi.next().unwrap().clone()),
                Step::TakeQ => out.push(scaled_q.take().unwrap()),
                Step::Merge => {
                    let tq = scaled_q.take().unwrap();
                    let tp = pi.next().unwrap();
                    let c = field.add(tp.coeff, tq.coeff);
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: tq.mono,
                        });
                    }
                }
            }
        }
        let r = Polynomial { terms: out };
        debug_assert!(r.is_valid(self));
        r
    }

    pub fn add(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        self.add_scaled(p, self.field().one(), &Monomial::one(self.nvars()), q)
    }

    pub fn sub(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        self.add_scaled(
            p,
            self.field().neg(self.field().one()),
            &Monomial::one(self.nvars()),
            q,
        )
    }

    pub fn scale(&self, p: &Polynomial, k: FieldElement) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field().mul(k, t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, p: &Polynomial, t: &Monomial) -> Polynomial {
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|term| Term {
                    coeff: term.coeff,
                    mono: term.mono.mul(t),
                })
                .collect(),
        }
    }

    pub fn mul(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for t in &p.terms {
            acc = self.add_scaled(&acc, t.coeff, &t.mono, q);
        }
        acc
    }

    /// Rescales to leading coefficient 1; zero stays zero.
    pub fn monic(&self, p: &Polynomial) -> Polynomial {
        match p.head() {
            None => Polynomial::zero(),
            Some(h) if h.coeff == self.field().one() => p.clone(),
            Some(h) => self.scale(p, self.field().inv(h.coeff)),
        }
    }

    /// Full normal form of p modulo G: repeatedly cancels the highest term
    /// divisible by some HM(g); irreducible heads move to the remainder.
    ///
    /// The reductor for a term is the first match in a fixed ordering of G
    /// by (HM ascending, insertion index), which makes results reproducible.
    pub fn normal_form(&self, p: &Polynomial, g_set: &[Polynomial]) -> Polynomial {
        self.normal_form_impl(p, g_set, None, &mut 0)
    }

    /// Normal form that also returns the quotients: p = sum q_i g_i + r.
    pub fn normal_form_with_cofactors(
        &self,
        p: &Polynomial,
        g_set: &[Polynomial],
    ) -> (Polynomial, Vec<Polynomial>) {
        let mut quotients = vec![Polynomial::zero(); g_set.len()];
        let r = self.normal_form_impl(p, g_set, Some(&mut quotients), &mut 0);
        (r, quotients)
    }

    pub(crate) fn normal_form_counted(
        &self,
        p: &Polynomial,
        g_set: &[Polynomial],
        steps: &mut u64,
    ) -> Polynomial {
        self.normal_form_impl(p, g_set, None, steps)
    }

    fn normal_form_impl(
        &self,
        p: &Polynomial,
        g_set: &[Polynomial],
        mut quotients: Option<&mut Vec<Polynomial>>,
        steps: &mut u64,
    ) -> Polynomial {
        assert!(
            g_set.iter().all(|g| !g.is_zero()),
            "reductor set contains a zero polynomial"
        );
        let mut reductor_order: Vec<usize> = (0..g_set.len()).collect();
        reductor_order.sort_by(|&i, &j| {
            self.order()
                .cmp(&g_set[i].terms[0].mono, &g_set[j].terms[0].mono)
                .then(i.cmp(&j))
        });

        let field = self.field();
        let mut remainder: Vec<Term> = Vec::new();
        let mut work = p.clone();
        while let Some(head) = work.head() {
            let reductor = reductor_order
                .iter()
                .copied()
                .find(|&i| g_set[i].terms[0].mono.divides(&head.mono));
            match reductor {
                Some(i) => {
                    let g = &g_set[i];
                    let t = head.mono.div(&g.terms[0].mono);
                    let factor = field.div(head.coeff, g.leading_coeff());
                    let k = field.neg(factor);
                    work = self.add_scaled(&work, k, &t, g);
                    *steps += 1;
                    if let Some(q) = quotients.as_deref_mut() {
                        q[i] = self.add_scaled(&q[i], factor, &t, &self.constant(field.one()));
                    }
                }
                None => {
                    remainder.push(head.clone());
                    work.terms.remove(0);
                }
            }
        }
        let r = Polynomial { terms: remainder };
        debug_assert!(r.is_valid(self));
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::MonomialOrder;
    use rand_chacha::rand_core::{RngCore, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    fn ring() -> Ring {
        Ring::new(32003, 3, MonomialOrder::GrevLex).unwrap()
    }

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exps(exps.to_vec())
    }

    /// p as coefficient * monomial pairs with signed coefficients.
    fn poly(ring: &Ring, terms: &[(i64, &[u32])]) -> Polynomial {
        ring.polynomial(
            terms
                .iter()
                .map(|&(c, e)| (ring.field().from_i64(c), m(e)))
                .collect(),
        )
    }

    #[test]
    fn leading_term_conventions() {
        let r = ring();
        // 3x^2y + z
        let p = poly(&r, &[(3, &[2, 1, 0]), (1, &[0, 0, 1])]);
        assert_eq!(
            p.leading(),
            (Monomial0::Mono(m(&[2, 1, 0])), r.field().from_u64(3))
        );
        assert_eq!(
            Polynomial::zero().leading(),
            (Monomial0::Zero, FieldElement::ZERO)
        );
        let c = poly(&r, &[(5, &[0, 0, 0])]);
        assert_eq!(
            c.leading(),
            (Monomial0::Mono(Monomial::one(3)), r.field().from_u64(5))
        );
    }

    #[test]
    fn add_scaled_examples() {
        let r = ring();
        // x^2 - x*(x + 1) = -x
        let p = poly(&r, &[(1, &[2, 0, 0])]);
        let q = poly(&r, &[(1, &[1, 0, 0]), (1, &[0, 0, 0])]);
        let got = r.add_scaled(&p, r.field().from_i64(-1), &m(&[1, 0, 0]), &q);
        assert_eq!(got, poly(&r, &[(-1, &[1, 0, 0])]));

        // K = 0 leaves p unchanged
        let same = r.add_scaled(&p, FieldElement::ZERO, &m(&[1, 0, 0]), &q);
        assert_eq!(same, p);

        // p - p = 0
        let zero = r.add_scaled(&p, r.field().from_i64(-1), &Monomial::one(3), &p);
        assert!(zero.is_zero());
    }

    /// Dictionary-based oracle for p + K*t*q.
    fn add_scaled_naive(
        r: &Ring,
        p: &Polynomial,
        k: FieldElement,
        t: &Monomial,
        q: &Polynomial,
    ) -> Polynomial {
        let mut dict: BTreeMap<Vec<u32>, FieldElement> = BTreeMap::new();
        for term in p.terms() {
            dict.insert(term.mono.exps().to_vec(), term.coeff);
        }
        for term in q.terms() {
            let key = term.mono.mul(t).exps().to_vec();
            let add = r.field().mul(k, term.coeff);
            let entry = dict.entry(key).or_insert(FieldElement::ZERO);
            *entry = r.field().add(*entry, add);
        }
        r.polynomial(
            dict.into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(e, c)| (c, Monomial::from_exps(e)))
                .collect(),
        )
    }

    fn random_poly(r: &Ring, rng: &mut ChaCha8Rng) -> Polynomial {
        let nterms = rng.next_u32() % 6;
        let terms = (0..nterms)
            .map(|_| {
                let exps: Vec<u32> = (0..3).map(|_| rng.next_u32() % 4).collect();
                (
                    r.field().from_u64(rng.next_u64()),
                    Monomial::from_exps(exps),
                )
            })
            .collect();
        r.polynomial(terms)
    }

    #[test]
    fn add_scaled_matches_dictionary_oracle() {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(0xADD);
        for _ in 0..300 {
            let p = random_poly(&r, &mut rng);
            let q = random_poly(&r, &mut rng);
            let k = r.field().from_u64(rng.next_u64());
            let t = Monomial::from_exps((0..3).map(|_| rng.next_u32() % 3).collect());
            assert_eq!(
                r.add_scaled(&p, k, &t, &q),
                add_scaled_naive(&r, &p, k, &t, &q)
            );
        }
    }

    #[test]
    fn normal_form_examples() {
        let r = ring();
        // x^2*y mod {x^2 - y} = y^2
        let p = poly(&r, &[(1, &[2, 1, 0])]);
        let g = poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]);
        assert_eq!(
            r.normal_form(&p, std::slice::from_ref(&g)),
            poly(&r, &[(1, &[0, 2, 0])])
        );

        // self-reduction
        assert!(r.normal_form(&g, std::slice::from_ref(&g)).is_zero());

        // x^3 - y^3 mod {x^2 - y, x*y - 1, y^2 - x} = 0
        let gens = vec![
            poly(&r, &[(1, &[2, 0, 0]), (-1, &[0, 1, 0])]),
            poly(&r, &[(1, &[1, 1, 0]), (-1, &[0, 0, 0])]),
            poly(&r, &[(1, &[0, 2, 0]), (-1, &[1, 0, 0])]),
        ];
        let p = poly(&r, &[(1, &[3, 0, 0]), (-1, &[0, 3, 0])]);
        assert!(r.normal_form(&p, &gens).is_zero());
    }

    #[test]
    fn normal_form_difference_lies_in_the_ideal() {
        let r = ring();
        let mut rng = ChaCha8Rng::seed_from_u64(0x9F);
        for _ in 0..100 {
            let g_set: Vec<Polynomial> = (0..3)
                .map(|_| random_poly(&r, &mut rng))
                .filter(|p| !p.is_zero())
                .collect();
            if g_set.is_empty() {
                continue;
            }
            let p = random_poly(&r, &mut rng);
            let (nf, quotients) = r.normal_form_with_cofactors(&p, &g_set);
            // Re-evaluate the combination: p == sum q_i g_i + nf.
            let mut acc = nf.clone();
            for (q, g) in quotients.iter().zip(&g_set) {
                acc = r.add(&acc, &r.mul(q, g));
            }
            assert_eq!(acc, p);
            // No term of nf is divisible by any HM(g).
            for term in nf.terms() {
                for g in &g_set {
                    assert!(!g.terms()[0].mono.divides(&term.mono));
                }
            }
        }
    }

    #[test]
    fn mul_and_monic() {
        let r = ring();
        let p = poly(&r, &[(2, &[1, 0, 0]), (2, &[0, 0, 0])]);
        let q = poly(&r, &[(1, &[1, 0, 0]), (-1, &[0, 0, 0])]);
        // (2x + 2)(x - 1) = 2x^2 - 2
        assert_eq!(
            r.mul(&p, &q),
            poly(&r, &[(2, &[2, 0, 0]), (-2, &[0, 0, 0])])
        );
        assert_eq!(r.monic(&p), poly(&r, &[(1, &[1, 0, 0]), (1, &[0, 0, 0])]));
        assert!(r.monic(&Polynomial::zero()).is_zero());
    }
}
