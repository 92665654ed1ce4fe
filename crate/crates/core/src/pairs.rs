//! Critical pairs, the Gebauer–Möller `Update` and lowest-degree selection.
//!
//! Pairs refer to basis entries by index, so rewriting an entry in place
//! (as middle solving does) is seen by every pair that points at it.

use std::collections::{BTreeSet, HashSet};

use crate::poly::{Monomial, Polynomial};
use crate::{Error, Result};

/// `(lcm, u1, f1, u2, f2)` with `u1 * HT(f1) = lcm = u2 * HT(f2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalPair {
    pub lcm: Monomial,
    pub left: (Monomial, usize),
    pub right: (Monomial, usize),
    pub degree: u32,
}

impl CriticalPair {
    pub fn indices(&self) -> (usize, usize) {
        (self.left.1, self.right.1)
    }

    pub fn touches(&self, k: usize) -> bool {
        self.left.1 == k || self.right.1 == k
    }

    fn other(&self, k: usize) -> usize {
        if self.left.1 == k {
            self.right.1
        } else {
            self.left.1
        }
    }
}

#[derive(Clone, Debug)]
pub struct BasisEntry {
    pub poly: Polynomial,
    pub live: bool,
    pub redundant: bool,
    /// Entry whose insertion made this one redundant.
    pub redundant_by: Option<usize>,
    /// Bumped whenever the leading term changes under substitution.
    pub version: u32,
}

/// The intermediate basis `G`. Entries are never removed, only marked dead.
#[derive(Clone, Debug, Default)]
pub struct Basis {
    entries: Vec<BasisEntry>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn poly(&self, i: usize) -> &Polynomial {
        &self.entries[i].poly
    }

    pub fn entry(&self, i: usize) -> &BasisEntry {
        &self.entries[i]
    }

    pub(crate) fn entry_mut(&mut self, i: usize) -> &mut BasisEntry {
        &mut self.entries[i]
    }

    pub fn leading(&self, i: usize) -> &Monomial {
        self.entries[i].poly.leading().expect("live basis entries are nonzero")
    }

    pub fn is_live(&self, i: usize) -> bool {
        self.entries[i].live
    }

    /// Live entries that still take part in pair creation.
    pub fn active(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| e.live && !e.redundant)
            .map(|(i, _)| i)
    }

    pub fn live(&self) -> impl Iterator<Item = usize> + '_ {
        self.entries.iter().enumerate().filter(|(_, e)| e.live).map(|(i, _)| i)
    }

    pub fn live_polys(&self) -> Vec<Polynomial> {
        self.live().map(|i| self.poly(i).clone()).collect()
    }

    fn push(&mut self, poly: Polynomial) -> usize {
        self.entries.push(BasisEntry {
            poly,
            live: true,
            redundant: false,
            redundant_by: None,
            version: 0,
        });
        self.entries.len() - 1
    }
}

/// The critical pair `C(G[i], G[j])`.
pub fn make_pair(i: usize, j: usize, basis: &Basis) -> Result<CriticalPair> {
    let (Some(hi), Some(hj)) = (basis.poly(i).leading(), basis.poly(j).leading()) else {
        return Err(Error::ZeroPolynomial("make_pair"));
    };
    Ok(pair_from_heads(i, hi, j, hj))
}

fn pair_from_heads(i: usize, hi: &Monomial, j: usize, hj: &Monomial) -> CriticalPair {
    let lcm = hi.lcm(hj);
    let ui = lcm.checked_div(hi).unwrap();
    let uj = lcm.checked_div(hj).unwrap();
    CriticalPair {
        degree: lcm.degree(),
        lcm,
        left: (ui, i),
        right: (uj, j),
    }
}

/// Pending pairs in insertion order.
#[derive(Clone, Debug, Default)]
pub struct PairQueue {
    pairs: Vec<CriticalPair>,
}

impl PairQueue {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &CriticalPair> {
        self.pairs.iter()
    }

    pub fn push(&mut self, p: CriticalPair) {
        self.pairs.push(p);
    }

    pub(crate) fn retain(&mut self, f: impl FnMut(&CriticalPair) -> bool) {
        self.pairs.retain(f);
    }

    pub(crate) fn iter_mut(&mut self) -> impl Iterator<Item = &mut CriticalPair> {
        self.pairs.iter_mut()
    }

    /// Removes and returns every pair of minimal lcm degree, in insertion order.
    pub fn select(&mut self) -> Result<Vec<CriticalPair>> {
        let d = self.pairs.iter().map(|p| p.degree).min().ok_or(Error::EmptyQueue)?;
        let (chosen, rest) = std::mem::take(&mut self.pairs).into_iter().partition(|p| p.degree == d);
        self.pairs = rest;
        Ok(chosen)
    }
}

/// A pair discarded by a chain criterion, with the entry that justified it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct DroppedPair {
    pub a: usize,
    pub b: usize,
    pub witness: usize,
}

/// `G` and `P` together, maintained by `Update`.
#[derive(Clone, Debug, Default)]
pub struct PairEngine {
    pub basis: Basis,
    pub queue: PairQueue,
    /// Only kept when entries may later change under substitution.
    pub(crate) dropped: Option<Vec<DroppedPair>>,
}

impl PairEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Also remembers why chain-criterion pairs were discarded, which middle
    /// solving needs to restore them when the justifying entry changes.
    pub fn with_drop_log() -> Self {
        PairEngine {
            dropped: Some(Vec::new()),
            ..Self::default()
        }
    }

    /// Appends `h` to the basis and installs its pairs (Gebauer–Möller).
    pub fn update(&mut self, h: Polynomial) -> Result<usize> {
        if h.is_zero() {
            return Err(Error::ZeroPolynomial("update"));
        }
        let k = self.basis.push(h);
        self.install(k, &HashSet::new());
        Ok(k)
    }

    /// Gebauer–Möller installation of entry `k` against the active entries
    /// not in `skip`.
    pub(crate) fn install(&mut self, k: usize, skip: &HashSet<usize>) {
        let hk = self.basis.leading(k).clone();
        let mut candidates: std::collections::VecDeque<CriticalPair> = self
            .basis
            .active()
            .filter(|&g| g != k && !skip.contains(&g))
            .map(|g| pair_from_heads(g, self.basis.leading(g), k, &hk))
            .collect();

        let mut kept: Vec<CriticalPair> = Vec::new();
        while let Some(p) = candidates.pop_front() {
            let g = p.other(k);
            if hk.is_coprime(self.basis.leading(g)) {
                kept.push(p);
                continue;
            }
            let witness = candidates
                .iter()
                .chain(kept.iter())
                .find(|q| q.lcm.divides(&p.lcm))
                .map(|q| q.other(k));
            match witness {
                None => kept.push(p),
                Some(w) => self.log_drop(g, k, w),
            }
        }

        let basis = &self.basis;
        let mut removed = Vec::new();
        self.queue.retain(|p| {
            let (a, b) = p.indices();
            let drop = hk.divides(&p.lcm) && basis.leading(a).lcm(&hk) != p.lcm && basis.leading(b).lcm(&hk) != p.lcm;
            if drop {
                removed.push((a, b));
            }
            !drop
        });
        for (a, b) in removed {
            self.log_drop(a, b, k);
        }

        for p in kept {
            let g = p.other(k);
            if !hk.is_coprime(self.basis.leading(g)) {
                self.queue.push(p);
            }
        }

        let newly_redundant: Vec<usize> = self
            .basis
            .active()
            .filter(|&g| g != k && !skip.contains(&g) && hk.divides(self.basis.leading(g)))
            .collect();
        for g in newly_redundant {
            let e = self.basis.entry_mut(g);
            e.redundant = true;
            e.redundant_by = Some(k);
        }
    }

    fn log_drop(&mut self, a: usize, b: usize, witness: usize) {
        if let Some(log) = self.dropped.as_mut() {
            log.push(DroppedPair { a, b, witness });
        }
    }

    /// Restores the pair invariants after basis entries were rewritten in
    /// place: entries in `deleted` became zero, entries in `head_changed`
    /// have a new leading term. Pairs between untouched entries keep their
    /// status; everything whose justification involved a touched entry is
    /// recreated.
    pub(crate) fn refresh(&mut self, head_changed: &BTreeSet<usize>, deleted: &BTreeSet<usize>) {
        // entries whose redundancy was justified by a touched entry lose it
        let mut pending: BTreeSet<usize> = head_changed.clone();
        loop {
            let extra: Vec<usize> = self
                .basis
                .live()
                .filter(|g| !pending.contains(g))
                .filter(|&g| {
                    let e = self.basis.entry(g);
                    e.redundant
                        && e.redundant_by
                            .is_some_and(|w| pending.contains(&w) || deleted.contains(&w))
                })
                .collect();
            if extra.is_empty() {
                break;
            }
            pending.extend(extra);
        }
        let touched = |i: &usize| pending.contains(i) || deleted.contains(i);

        let mut requeue = Vec::new();
        if let Some(log) = self.dropped.as_mut() {
            log.retain(|d| {
                if touched(&d.a) || touched(&d.b) {
                    return false;
                }
                if touched(&d.witness) {
                    requeue.push((d.a, d.b));
                    return false;
                }
                true
            });
        }

        self.queue.retain(|p| {
            let (a, b) = p.indices();
            !touched(&a) && !touched(&b)
        });
        // untouched endpoints keep their leading terms; recompute anyway
        let basis = &self.basis;
        for p in self.queue.iter_mut() {
            let (a, b) = p.indices();
            *p = pair_from_heads(a, basis.leading(a), b, basis.leading(b));
        }
        for (a, b) in requeue {
            let (ha, hb) = (self.basis.leading(a), self.basis.leading(b));
            if !ha.is_coprime(hb) {
                let p = pair_from_heads(a, ha, b, hb);
                self.queue.push(p);
            }
        }

        for &k in &pending {
            let e = self.basis.entry_mut(k);
            e.redundant = false;
            e.redundant_by = None;
        }
        let mut waiting: HashSet<usize> = pending.iter().copied().collect();
        for &k in &pending {
            waiting.remove(&k);
            self.install(k, &waiting);
        }
    }

    /// Discards every pair and re-installs all live entries from scratch.
    pub(crate) fn rebuild(&mut self) {
        self.queue = PairQueue::default();
        if let Some(log) = self.dropped.as_mut() {
            log.clear();
        }
        let live: Vec<usize> = self.basis.live().collect();
        for &k in &live {
            let e = self.basis.entry_mut(k);
            e.redundant = false;
            e.redundant_by = None;
        }
        let mut waiting: HashSet<usize> = live.iter().copied().collect();
        for k in live {
            waiting.remove(&k);
            self.install(k, &waiting);
        }
    }

    /// Checks that every pair refers to live entries and none is coprime.
    pub fn queue_is_consistent(&self) -> bool {
        self.queue.iter().all(|p| {
            let (a, b) = p.indices();
            a != b
                && self.basis.is_live(a)
                && self.basis.is_live(b)
                && !self.basis.leading(a).is_coprime(self.basis.leading(b))
                && p.lcm == self.basis.leading(a).lcm(self.basis.leading(b))
        })
    }
}
