//! The signature-guarded basis engine.
//!
//! One run extends a known Gröbner basis by a single new generator: the
//! working set holds labeled polynomials, pending work is a set of lazy
//! monomial multiples, and a single pruning criterion discards multiples
//! whose signature is covered by something strictly below them. The
//! incremental driver folds a whole generator list through such runs.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use crate::algebra::{Monomial, Monomial0, Polynomial, Ring};
use crate::labeled::{
    h_compare, has_reductor_for, labeled_mul, reduce_labeled, HOrdering, LabeledPolynomial,
};

/// Counters reported for every run. All counters are monotone while a run
/// is in progress.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    pub iterations: u64,
    pub pairs_generated: u64,
    pub pairs_pruned: u64,
    pub zero_reductions: u64,
    pub reduction_steps: u64,
    pub basis_size_raw: u64,
    pub basis_size_reduced: u64,
    pub wall_time: Duration,
}

impl RunStats {
    fn absorb(&mut self, other: &RunStats) {
        self.iterations += other.iterations;
        self.pairs_generated += other.pairs_generated;
        self.pairs_pruned += other.pairs_pruned;
        self.zero_reductions += other.zero_reductions;
        self.reduction_steps += other.reduction_steps;
    }
}

/// Tie-break between pending multiples whose minimal signatures coincide.
/// Either choice yields the same final basis; the default prefers the
/// cheaper multiple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SelectTieBreak {
    #[default]
    SmallerHead,
    LargerHead,
}

#[derive(Debug, Clone)]
pub struct EngineOptions {
    /// Track cofactor witnesses on every labeled polynomial.
    pub certify: bool,
    /// Run the per-iteration invariant checks; violations abort.
    pub check_invariants: bool,
    /// Abort when a single run exceeds this many main-loop iterations.
    pub max_iterations: u64,
    pub select_tie_break: SelectTieBreak,
    /// Driver only: process generators in ascending total degree instead of
    /// input order.
    pub sort_generators_by_degree: bool,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            certify: false,
            check_invariants: false,
            max_iterations: 1_000_000,
            select_tie_break: SelectTieBreak::default(),
            sort_generators_by_degree: false,
        }
    }
}

/// A not-yet-expanded monomial multiple of a working-set element. Signature
/// and head of the product are cached; the polynomial itself is built only
/// if the multiple survives pruning and gets selected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PendingMultiple {
    pub base: usize,
    pub multiplier: Monomial,
    /// multiplier * sig(base); never zero.
    pub sig: Monomial,
    /// multiplier * HM(base); never zero.
    pub head: Monomial,
}

/// Loop phase at which [`EngineState::check_invariants`] applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckPhase {
    /// Start of an iteration, current element not yet reduced.
    BeforeReduce,
    /// Current element reduced but not yet inserted.
    AfterReduce,
    /// Pending set pruned for this iteration.
    AfterPrune,
}

pub struct EngineState<'r> {
    ring: &'r Ring,
    options: EngineOptions,
    /// Basis in progress; insertion order is preserved and indices are stable.
    basis: Vec<LabeledPolynomial>,
    pending: Vec<PendingMultiple>,
    current: Option<LabeledPolynomial>,
    stats: RunStats,
    signature_regressions: u64,
    last_selected_sig: Option<Monomial>,
    /// Generators of the monoideal of zero-polynomial signatures; maintained
    /// only when invariant checks are enabled.
    syzygy_sig_gens: Vec<Monomial>,
    /// Generators of the (signature, head) pair monoideal; checks only.
    pair_gens: Vec<(Monomial, Monomial)>,
}

/// Result of one engine run: the final working set verbatim plus counters.
#[derive(Debug, Clone)]
pub struct SsgRun {
    pub labeled: Vec<LabeledPolynomial>,
    pub stats: RunStats,
    pub signature_regressions: u64,
}

impl SsgRun {
    /// Every polynomial part, including zeros and the seeded generators.
    pub fn raw_basis(&self) -> Vec<Polynomial> {
        self.labeled.iter().map(|h| h.poly().clone()).collect()
    }

    /// Polynomial parts with zeros dropped.
    pub fn nonzero_basis(&self) -> Vec<Polynomial> {
        self.labeled
            .iter()
            .map(|h| h.poly())
            .filter(|p| !p.is_zero())
            .cloned()
            .collect()
    }
}

impl<'r> EngineState<'r> {
    /// Seeds the working set for extending the basis `g_basis` by `f`:
    /// a (HM(g), 0) and a (0, g) element per generator, and (1, f) as the
    /// first element to process.
    ///
    /// `g_basis` must be a Gröbner basis; that is the caller's contract and
    /// is not checked. Zero or constant generators and a zero `f` are
    /// rejected outright.
    pub fn init(
        ring: &'r Ring,
        g_basis: &[Polynomial],
        f: &Polynomial,
        options: EngineOptions,
    ) -> Self {
        assert!(!f.is_zero(), "the new generator must be nonzero");
        for g in g_basis {
            assert!(!g.is_zero(), "basis generators must be nonzero");
            assert!(!g.is_constant(), "basis generators must not be constants");
        }
        let mut basis = Vec::with_capacity(2 * g_basis.len());
        let mut syzygy_sig_gens = Vec::new();
        for g in g_basis {
            let head = g.leading_monomial();
            if options.check_invariants {
                syzygy_sig_gens.push(head.expect_mono().clone());
            }
            basis.push(if options.certify {
                LabeledPolynomial::with_cofactor(head, Polynomial::zero(), g.clone())
            } else {
                LabeledPolynomial::new(head, Polynomial::zero())
            });
        }
        for g in g_basis {
            basis.push(if options.certify {
                LabeledPolynomial::with_cofactor(Monomial0::Zero, g.clone(), Polynomial::zero())
            } else {
                LabeledPolynomial::new(Monomial0::Zero, g.clone())
            });
        }
        let one = Monomial0::Mono(Monomial::one(ring.nvars()));
        let current = if options.certify {
            LabeledPolynomial::with_cofactor(one, f.clone(), ring.constant(ring.field().one()))
        } else {
            LabeledPolynomial::new(one, f.clone())
        };
        EngineState {
            ring,
            options,
            basis,
            pending: Vec::new(),
            current: Some(current),
            stats: RunStats::default(),
            signature_regressions: 0,
            last_selected_sig: None,
            syzygy_sig_gens,
            pair_gens: Vec::new(),
        }
    }

    pub fn basis(&self) -> &[LabeledPolynomial] {
        &self.basis
    }

    pub fn pending(&self) -> &[PendingMultiple] {
        &self.pending
    }

    pub fn current(&self) -> Option<&LabeledPolynomial> {
        self.current.as_ref()
    }

    pub fn stats(&self) -> &RunStats {
        &self.stats
    }

    fn checks_enabled(&self) -> bool {
        self.options.check_invariants
    }

    /// Head-reduces the current element against the working set and stores
    /// it back monic.
    fn reduce_current(&mut self) {
        let current = self.current.take().expect("no current element");
        let mut steps = 0;
        let reduced = reduce_labeled(self.ring, current, &self.basis, &mut steps);
        self.stats.reduction_steps += steps;
        let reduced = self.make_monic(reduced);
        if reduced.poly().is_zero() {
            self.stats.zero_reductions += 1;
        }
        self.current = Some(reduced);
    }

    /// Rescaling by a unit keeps the signature and, in certified mode, the
    /// cofactor witness valid.
    fn make_monic(&self, h: LabeledPolynomial) -> LabeledPolynomial {
        let c = h.poly().leading_coeff();
        if c.is_zero() || c == self.ring.field().one() {
            return h;
        }
        let s = self.ring.field().inv(c);
        let poly = self.ring.scale(h.poly(), s);
        match h.cofactor() {
            Some(u) => {
                LabeledPolynomial::with_cofactor(h.sig().clone(), poly, self.ring.scale(u, s))
            }
            None => LabeledPolynomial::new(h.sig().clone(), poly),
        }
    }

    /// Moves the current element into the working set and returns its index.
    fn insert_current(&mut self) -> usize {
        let h = self.current.take().expect("no current element");
        if self.checks_enabled() {
            self.record_insertion(&h);
        }
        self.basis.push(h);
        self.basis.len() - 1
    }

    /// Extends the pending set for a freshly inserted nonzero element:
    /// multiples of strictly-below elements raised to the common head, and
    /// multiples of the new element raised toward strictly-above elements.
    fn generate_pairs(&mut self, new_idx: usize) {
        let mut additions: Vec<(usize, Monomial)> = Vec::new();
        {
            let new = &self.basis[new_idx];
            let new_head = new
                .head_mono()
                .expect("pair generation requires a nonzero polynomial");
            for (i, r) in self.basis.iter().enumerate() {
                let Some(r_head) = r.head_mono() else {
                    continue;
                };
                if h_compare(self.ring, r, new) == HOrdering::FirstBelow {
                    additions.push((i, r_head.lcm(new_head).div(r_head)));
                }
            }
            for r in self.basis.iter() {
                if h_compare(self.ring, r, new) == HOrdering::FirstAbove {
                    let r_head = r
                        .head_mono()
                        .expect("elements above a nonzero element have nonzero heads");
                    let t = r_head.lcm(new_head).div(new_head);
                    // No strictly-above element's head still divides the
                    // reduced head, so the multiplier is proper.
                    debug_assert!(!t.is_one());
                    additions.push((new_idx, t));
                }
            }
        }
        for (base, multiplier) in additions {
            self.push_pending(base, multiplier);
        }
    }

    /// Set-style insertion keyed on (base, multiplier).
    fn push_pending(&mut self, base: usize, multiplier: Monomial) {
        if self
            .pending
            .iter()
            .any(|b| b.base == base && b.multiplier == multiplier)
        {
            return;
        }
        let h = &self.basis[base];
        let sig = match h.sig() {
            Monomial0::Mono(s) => s.mul(&multiplier),
            Monomial0::Zero => unreachable!("pending multiples never have zero signatures"),
        };
        let head = h
            .head_mono()
            .expect("pending multiples need nonzero heads")
            .mul(&multiplier);
        self.pending.push(PendingMultiple {
            base,
            multiplier,
            sig,
            head,
        });
        self.stats.pairs_generated += 1;
    }

    /// Drops every pending multiple whose signature is divisible by the
    /// signature of a working-set element strictly below it. Syzygies and
    /// the seeded (HM(g), 0) elements are below everything here, so their
    /// signatures prune outright.
    fn prune_pending(&mut self) {
        let ring = self.ring;
        let basis = &self.basis;
        let before = self.pending.len();
        self.pending
            .retain(|b| !basis.iter().any(|r| prunes(ring, r, b)));
        self.stats.pairs_pruned += (before - self.pending.len()) as u64;
    }

    /// Removes and returns a pending multiple with minimal signature, or
    /// None when the pending set is exhausted. Ties fall to the configured
    /// head preference, then to the lower base index.
    pub fn select_next(&mut self) -> Option<PendingMultiple> {
        if self.pending.is_empty() {
            return None;
        }
        let order = self.ring.order();
        let mut best = 0;
        for i in 1..self.pending.len() {
            let (a, b) = (&self.pending[i], &self.pending[best]);
            let better = match order.cmp(&a.sig, &b.sig) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => {
                    let head_cmp = match self.options.select_tie_break {
                        SelectTieBreak::SmallerHead => order.cmp(&a.head, &b.head),
                        SelectTieBreak::LargerHead => order.cmp(&b.head, &a.head),
                    };
                    match head_cmp {
                        Ordering::Less => true,
                        Ordering::Greater => false,
                        Ordering::Equal => a.base < b.base,
                    }
                }
            };
            if better {
                best = i;
            }
        }
        let chosen = self.pending.remove(best);
        if let Some(last) = &self.last_selected_sig {
            if order.cmp(&chosen.sig, last) == Ordering::Less {
                self.signature_regressions += 1;
            }
        }
        self.last_selected_sig = Some(chosen.sig.clone());
        Some(chosen)
    }

    /// Expands a selected multiple into the new current element.
    fn set_current(&mut self, pm: PendingMultiple) {
        let expanded = labeled_mul(self.ring, &pm.multiplier, &self.basis[pm.base]);
        debug_assert_eq!(expanded.sig(), &Monomial0::Mono(pm.sig.clone()));
        debug_assert_eq!(expanded.head(), Monomial0::Mono(pm.head.clone()));
        self.current = Some(expanded);
    }

    /// Asserts the loop-phase invariants; failures abort with the label of
    /// the broken property.
    pub fn check_invariants(&self, phase: CheckPhase) {
        match phase {
            CheckPhase::BeforeReduce => self.check_selected_signature_unpruned(),
            CheckPhase::AfterReduce => {
                self.check_reduction_complete();
                self.check_insertion_novel();
                self.check_monoideal_growth();
            }
            CheckPhase::AfterPrune => self.check_pending_reducible(),
        }
    }

    /// No working-set element strictly below the current one may have a
    /// signature dividing the current signature; such a divisor would have
    /// pruned this element before it was selected.
    fn check_selected_signature_unpruned(&self) {
        let current = self.current.as_ref().expect("no current element");
        let sig = current.sig();
        for (i, r) in self.basis.iter().enumerate() {
            if r.sig().divides(sig) && h_compare(self.ring, r, current) == HOrdering::FirstBelow {
                panic!(
                    "invariant violation [selected-signature-unpruned]: element {i} \
                     sits below the current element and its signature divides {sig:?}"
                );
            }
        }
    }

    /// After reduction nothing strictly above the current element may still
    /// divide its head; the reducer only stops when that set is empty.
    fn check_reduction_complete(&self) {
        let current = self.current.as_ref().expect("no current element");
        let Some(head) = current.head_mono() else {
            return;
        };
        for (i, r) in self.basis.iter().enumerate() {
            let divides = r.head_mono().is_some_and(|rh| rh.divides(head));
            if divides && h_compare(self.ring, r, current) == HOrdering::FirstAbove {
                panic!(
                    "invariant violation [reduction-complete]: element {i} still \
                     reduces the current head {head:?}"
                );
            }
        }
    }

    /// The reduced element must be genuinely new: no working-set element may
    /// simultaneously divide its head and its signature.
    fn check_insertion_novel(&self) {
        let current = self.current.as_ref().expect("no current element");
        let Some(head) = current.head_mono() else {
            return;
        };
        for (i, r) in self.basis.iter().enumerate() {
            let head_div = r.head_mono().is_some_and(|rh| rh.divides(head));
            if head_div && r.sig().divides(current.sig()) {
                panic!(
                    "invariant violation [insertion-novel]: element {i} covers both \
                     the head and the signature of the element being inserted"
                );
            }
        }
    }

    /// Insertion must strictly enlarge one of the two tracked monoideals:
    /// the zero-polynomial signature monoideal, or the (signature, head)
    /// pair monoideal. Dickson's lemma then bounds the number of insertions.
    fn check_monoideal_growth(&self) {
        let current = self.current.as_ref().expect("no current element");
        let sig = match current.sig() {
            Monomial0::Mono(s) => s,
            Monomial0::Zero => return,
        };
        match current.head_mono() {
            None => {
                if let Some(g) = self.syzygy_sig_gens.iter().find(|g| g.divides(sig)) {
                    panic!(
                        "invariant violation [monoideal-growth]: syzygy signature {sig:?} \
                         already covered by generator {g:?}"
                    );
                }
            }
            Some(head) => {
                if let Some((a, b)) = self
                    .pair_gens
                    .iter()
                    .find(|(a, b)| a.divides(sig) && b.divides(head))
                {
                    panic!(
                        "invariant violation [monoideal-growth]: pair ({sig:?}, {head:?}) \
                         already covered by generator ({a:?}, {b:?})"
                    );
                }
            }
        }
    }

    /// Every pending multiple must admit at least one signature-safe
    /// reductor in the working set.
    fn check_pending_reducible(&self) {
        for (i, b) in self.pending.iter().enumerate() {
            let sig = Monomial0::Mono(b.sig.clone());
            if !has_reductor_for(self.ring, &sig, &b.head, &self.basis) {
                panic!(
                    "invariant violation [pending-multiple-has-reductor]: pending \
                     multiple {i} of base {} has no reductor",
                    b.base
                );
            }
        }
    }

    fn record_insertion(&mut self, h: &LabeledPolynomial) {
        let Monomial0::Mono(sig) = h.sig() else {
            return;
        };
        match h.head_mono() {
            None => self.syzygy_sig_gens.push(sig.clone()),
            Some(head) => self.pair_gens.push((sig.clone(), head.clone())),
        }
    }
}

/// sig(r) divides sig(b) and r sits strictly below b.
fn prunes(ring: &Ring, r: &LabeledPolynomial, b: &PendingMultiple) -> bool {
    let Monomial0::Mono(sig_r) = r.sig() else {
        return false;
    };
    if sig_r.degree() > b.sig.degree() || !sig_r.divides(&b.sig) {
        return false;
    }
    match r.head_mono() {
        // Zero polynomial with a nonzero signature: below everything pending.
        None => true,
        Some(head_r) => ring.order().cmp_mul(head_r, &b.sig, &b.head, sig_r) == Ordering::Less,
    }
}

/// Extends the Gröbner basis `g_basis` by the generator `f`.
///
/// Returns the final working set verbatim: zero polynomials mark discovered
/// syzygies and the seeded generators reappear unchanged. Use
/// [`interreduce`] on [`SsgRun::nonzero_basis`] for the canonical form.
pub fn simple_signature_groebner(
    ring: &Ring,
    g_basis: &[Polynomial],
    f: &Polynomial,
    options: &EngineOptions,
) -> SsgRun {
    let started = Instant::now();
    let mut state = EngineState::init(ring, g_basis, f, options.clone());
    loop {
        state.stats.iterations += 1;
        assert!(
            state.stats.iterations <= state.options.max_iterations,
            "invariant violation [iteration-ceiling]: exceeded {} iterations",
            state.options.max_iterations
        );
        if state.checks_enabled() {
            state.check_invariants(CheckPhase::BeforeReduce);
        }
        state.reduce_current();
        if state.checks_enabled() {
            state.check_invariants(CheckPhase::AfterReduce);
        }
        let idx = state.insert_current();
        if !state.basis[idx].poly().is_zero() {
            state.generate_pairs(idx);
        }
        state.prune_pending();
        if state.checks_enabled() {
            state.check_invariants(CheckPhase::AfterPrune);
        }
        match state.select_next() {
            Some(pm) => state.set_current(pm),
            None => break,
        }
    }
    let mut stats = state.stats;
    stats.wall_time = started.elapsed();
    stats.basis_size_raw = state.basis.len() as u64;
    SsgRun {
        labeled: state.basis,
        stats,
        signature_regressions: state.signature_regressions,
    }
}

/// Mutual full reduction to a fixpoint: zeros dropped, every element monic
/// with no term divisible by another element's head, sorted by ascending
/// head monomial. On a Gröbner basis input this is the unique reduced
/// Gröbner basis.
pub fn interreduce(ring: &Ring, g_set: &[Polynomial]) -> Vec<Polynomial> {
    let mut work: Vec<Polynomial> = g_set
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| ring.monic(p))
        .collect();
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

/// One increment of the driver, kept for certification and inspection.
#[derive(Debug, Clone)]
pub struct IncrementRecord {
    /// Reduced basis before this increment; the run's seeding set.
    pub previous_basis: Vec<Polynomial>,
    /// The generator this increment added.
    pub generator: Polynomial,
    pub run: SsgRun,
}

#[derive(Debug, Clone)]
pub struct DriverRun {
    /// Reduced Gröbner basis of the whole input.
    pub basis: Vec<Polynomial>,
    pub stats: RunStats,
    pub increments: Vec<IncrementRecord>,
    pub signature_regressions: u64,
}

/// Computes the reduced Gröbner basis of the ideal spanned by `generators`,
/// one generator at a time. Zero generators are skipped; generators already
/// in the ideal built so far are skipped; when the ideal reaches the whole
/// ring the basis {1} is returned immediately.
pub fn incremental_groebner(
    ring: &Ring,
    generators: &[Polynomial],
    options: &EngineOptions,
) -> DriverRun {
    let started = Instant::now();
    let mut gens: Vec<Polynomial> = generators
        .iter()
        .filter(|p| !p.is_zero())
        .cloned()
        .collect();
    if options.sort_generators_by_degree {
        gens.sort_by_key(|p| p.total_degree());
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut stats = RunStats::default();
    let mut increments = Vec::new();
    let mut signature_regressions = 0;
    for f in &gens {
        if basis.is_empty() {
            basis = interreduce(ring, std::slice::from_ref(f));
        } else {
            if ring.normal_form(f, &basis).is_zero() {
                continue;
            }
            let run = simple_signature_groebner(ring, &basis, f, options);
            stats.absorb(&run.stats);
            stats.basis_size_raw = run.stats.basis_size_raw;
            signature_regressions += run.signature_regressions;
            let next = interreduce(ring, &run.nonzero_basis());
            increments.push(IncrementRecord {
                previous_basis: std::mem::take(&mut basis),
                generator: f.clone(),
                run,
            });
            basis = next;
        }
        if basis.iter().any(|p| p.is_constant()) {
            basis = vec![ring.constant(ring.field().one())];
            break;
        }
    }
    if stats.basis_size_raw == 0 {
        stats.basis_size_raw = basis.len() as u64;
    }
    stats.basis_size_reduced = basis.len() as u64;
    stats.wall_time = started.elapsed();
    DriverRun {
        basis,
        stats,
        increments,
        signature_regressions,
    }
}
