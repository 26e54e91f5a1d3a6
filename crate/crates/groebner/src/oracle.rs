//! Independent classical machinery used to validate the engine:
//! S-polynomials, Buchberger's algorithm, Gröbner-basis and membership
//! checks, and cofactor certification. Deliberately shares nothing with the
//! engine beyond the arithmetic substrate, so agreement between the two is
//! meaningful evidence.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::algebra::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::labeled::LabeledPolynomial;

/// Candidate S-polynomial between two basis elements, ordered for a
/// min-first queue by (sugar degree, lcm, indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalPair {
    pub i: usize,
    pub j: usize,
    pub lcm: Monomial,
    pub sugar: u64,
    order: MonomialOrder,
}

impl CriticalPair {
    fn new(ring: &Ring, basis: &[Polynomial], sugars: &[u64], i: usize, j: usize) -> Self {
        assert!(i < j);
        let head_i = &basis[i].terms()[0].mono;
        let head_j = &basis[j].terms()[0].mono;
        let lcm = head_i.lcm(head_j);
        let sugar_of = |k: usize| sugars[k] + lcm.degree() - basis[k].terms()[0].mono.degree();
        let sugar = sugar_of(i).max(sugar_of(j));
        CriticalPair {
            i,
            j,
            lcm,
            sugar,
            order: ring.order(),
        }
    }
}

impl PartialOrd for CriticalPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CriticalPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sugar
            .cmp(&other.sugar)
            .then_with(|| self.order.cmp(&self.lcm, &other.lcm))
            .then_with(|| self.i.cmp(&other.i))
            .then_with(|| self.j.cmp(&other.j))
    }
}

/// Counters from a Buchberger run, mirroring the engine's run counters.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BuchbergerStats {
    pub iterations: u64,
    pub pairs_generated: u64,
    pub pairs_pruned: u64,
    pub zero_reductions: u64,
    pub reduction_steps: u64,
    pub basis_size_raw: u64,
}

/// The classical leading-term-cancelling combination
/// (lcm/HM(p)) p / HC(p) - (lcm/HM(q)) q / HC(q).
pub fn s_polynomial(ring: &Ring, p: &Polynomial, q: &Polynomial) -> Polynomial {
    let p_head = p.head().expect("s-polynomial of a zero polynomial");
    let q_head = q.head().expect("s-polynomial of a zero polynomial");
    let lcm = p_head.mono.lcm(&q_head.mono);
    let field = ring.field();
    let scaled_p = ring.add_scaled(
        &Polynomial::zero(),
        field.inv(p_head.coeff),
        &lcm.div(&p_head.mono),
        p,
    );
    ring.add_scaled(
        &scaled_p,
        field.neg(field.inv(q_head.coeff)),
        &lcm.div(&q_head.mono),
        q,
    )
}

/// Buchberger completion with the coprime-head criterion and full
/// normal-form reduction of S-polynomials.
///
/// Works in rounds: every pair of the current working set is processed in
/// (sugar, lcm, index) order, the surviving normal forms are adjoined, and
/// the set is interreduced before the next round. The loop ends exactly
/// when every S-polynomial reduces to zero, which is the defining Gröbner
/// criterion, so correctness needs no pair bookkeeping. Interreduction
/// between rounds keeps reducers small, which matters under lex where
/// un-reduced intermediate elements blow up in degree.
pub fn buchberger(ring: &Ring, generators: &[Polynomial]) -> Vec<Polynomial> {
    buchberger_with_stats(ring, generators).0
}

pub fn buchberger_with_stats(
    ring: &Ring,
    generators: &[Polynomial],
) -> (Vec<Polynomial>, BuchbergerStats) {
    let mut stats = BuchbergerStats::default();
    let nonzero: Vec<Polynomial> = generators
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| ring.monic(p))
        .collect();
    if nonzero.is_empty() {
        return (nonzero, stats);
    }
    let mut work = autoreduce(ring, nonzero);
    loop {
        let sugars: Vec<u64> = work.iter().map(|p| p.total_degree()).collect();
        let mut queue: BinaryHeap<std::cmp::Reverse<CriticalPair>> = BinaryHeap::new();
        for j in 0..work.len() {
            for i in 0..j {
                queue.push(std::cmp::Reverse(CriticalPair::new(
                    ring, &work, &sugars, i, j,
                )));
                stats.pairs_generated += 1;
            }
        }
        let mut new_elements: Vec<Polynomial> = Vec::new();
        while let Some(std::cmp::Reverse(pair)) = queue.pop() {
            stats.iterations += 1;
            let head_i = &work[pair.i].terms()[0].mono;
            let head_j = &work[pair.j].terms()[0].mono;
            if head_i.is_coprime(head_j) {
                stats.pairs_pruned += 1;
                continue;
            }
            let s = s_polynomial(ring, &work[pair.i], &work[pair.j]);
            let nf = ring.normal_form_counted(&s, &work, &mut stats.reduction_steps);
            if nf.is_zero() {
                stats.zero_reductions += 1;
            } else {
                new_elements.push(ring.monic(&nf));
            }
        }
        if new_elements.is_empty() {
            break;
        }
        // Each new head is irreducible modulo `work`, so the head ideal
        // strictly grows every round and the loop terminates.
        work.extend(new_elements);
        work = autoreduce(ring, work);
    }
    stats.basis_size_raw = work.len() as u64;
    (work, stats)
}

/// Mutual full reduction to a fixpoint, independent of the engine's
/// canonicalizer so the oracle stays self-contained.
fn autoreduce(ring: &Ring, mut work: Vec<Polynomial>) -> Vec<Polynomial> {
    'restart: loop {
        for i in 0..work.len() {
            let others: Vec<Polynomial> = work
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let nf = ring.normal_form(&work[i], &others);
            if nf.is_zero() {
                work.remove(i);
                continue 'restart;
            }
            let nf = ring.monic(&nf);
            if nf != work[i] {
                work[i] = nf;
                continue 'restart;
            }
        }
        break;
    }
    work.sort_by(|a, b| ring.order().cmp(&a.terms()[0].mono, &b.terms()[0].mono));
    work
}

/// True iff every S-polynomial of every pair reduces to zero modulo G.
pub fn is_groebner_basis(ring: &Ring, g_set: &[Polynomial]) -> bool {
    assert!(!g_set.is_empty(), "emptiness is not a meaningful basis");
    assert!(
        g_set.iter().all(|p| !p.is_zero()),
        "basis must not contain zeros"
    );
    for j in 0..g_set.len() {
        for i in 0..j {
            let s = s_polynomial(ring, &g_set[i], &g_set[j]);
            if !ring.normal_form(&s, g_set).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Membership of p in the ideal generated by the Gröbner basis G.
pub fn ideal_membership(ring: &Ring, p: &Polynomial, g_set: &[Polynomial]) -> bool {
    ring.normal_form(p, g_set).is_zero()
}

/// Checks the defining property of a labeled polynomial (sig, p) against
/// the generator f and the previous basis: the stored cofactor u must have
/// head monomial sig and satisfy u*f = p modulo the previous ideal.
pub fn certify_labeled(
    ring: &Ring,
    h: &LabeledPolynomial,
    f: &Polynomial,
    previous_basis: &[Polynomial],
) -> bool {
    let u = h
        .cofactor()
        .expect("certification requires a stored cofactor");
    if &u.leading_monomial() != h.sig() {
        return false;
    }
    let difference = ring.sub(&ring.mul(u, f), h.poly());
    ring.normal_form(&difference, previous_basis).is_zero()
}
