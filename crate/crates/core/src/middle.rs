//! Middle solving: fixing variables between reduction rounds.
//!
//! After a round, any new polynomial that involves a single variable is
//! solved over GF(2). A unique root is substituted into the basis, the
//! polynomials about to be inserted and the stored round history; when the
//! substitution turns further basis entries univariate the process repeats.
//! A univariate polynomial without roots proves the system inconsistent.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::bench::stats::StatEvent;
use crate::f4::{RenewMode, Solver};
use crate::poly::{Monomial, Polynomial, Ring};

/// A variable fixed by middle solving.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveEvent {
    /// Round after which the value was found; 0 for the inputs.
    pub round: usize,
    pub var: usize,
    pub value: bool,
}

/// Partial assignment built up during a run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<usize, bool>,
    events: Vec<SolveEvent>,
}

/// Two different values for one variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conflict {
    pub var: usize,
}

impl Assignment {
    pub fn get(&self, var: usize) -> Option<bool> {
        self.values.get(&var).copied()
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `(var, value)` ascending by variable.
    pub fn iter(&self) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.values.iter().map(|(&k, &v)| (k, v))
    }

    pub fn events(&self) -> &[SolveEvent] {
        &self.events
    }

    /// Records `var := value`; `Ok(false)` when it was already known.
    pub fn set(&mut self, round: usize, var: usize, value: bool) -> Result<bool, Conflict> {
        match self.values.get(&var) {
            Some(&v) if v == value => Ok(false),
            Some(_) => Err(Conflict { var }),
            None => {
                self.values.insert(var, value);
                self.events.push(SolveEvent { round, var, value });
                Ok(true)
            }
        }
    }

    /// Applies every fixed value to `p`.
    pub fn apply(&self, ring: &Ring, p: &Polynomial) -> Polynomial {
        self.iter()
            .fold(p.clone(), |q, (var, value)| ring.substitute(&q, var, value))
    }
}

/// Univariate, non-constant members of `polys` with their variable.
pub fn extract_candidates(polys: &[Polynomial]) -> Vec<(Polynomial, usize)> {
    polys
        .iter()
        .filter_map(|p| p.univariate_variable().map(|v| (p.clone(), v)))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Variables with a unique root, in candidate order; may be empty.
    Assigned(Vec<(usize, bool)>),
    /// Some candidate has no root, or two candidates disagree.
    Inconsistent,
}

/// Roots of each candidate over GF(2). Candidates with two roots (such as
/// `x^2 + x`) carry no information and are skipped.
pub fn solve_unique(ring: &Ring, candidates: &[(Polynomial, usize)]) -> SolveOutcome {
    let mut found: Vec<(usize, bool)> = Vec::new();
    for (p, var) in candidates {
        let roots = ring.roots_gf2(p, *var);
        match roots.as_slice() {
            [] => return SolveOutcome::Inconsistent,
            [value] => match found.iter().find(|(v, _)| v == var) {
                Some((_, old)) if old != value => return SolveOutcome::Inconsistent,
                Some(_) => {}
                None => found.push((*var, *value)),
            },
            _ => {}
        }
    }
    SolveOutcome::Assigned(found)
}

/// Solves univariate input polynomials before the first round.
pub(crate) fn initial_pass(solver: &mut Solver<'_>) {
    let live = solver.engine.basis.live_polys();
    let mut none = Vec::new();
    solve_and_renew(solver, 0, &live, &mut none);
}

/// Runs after round `round` on its new polynomials `pending`, which are
/// rewritten in place.
pub(crate) fn after_round(solver: &mut Solver<'_>, round: usize, pending: &mut Vec<Polynomial>) {
    let fresh = pending.clone();
    solve_and_renew(solver, round, &fresh, pending);
}

fn solve_and_renew(solver: &mut Solver<'_>, round: usize, source: &[Polynomial], pending: &mut Vec<Polynomial>) {
    let candidates = extract_candidates(source);
    if candidates.is_empty() {
        return;
    }
    match solve_unique(solver.ring, &candidates) {
        SolveOutcome::Inconsistent => solver.inconsistent = true,
        SolveOutcome::Assigned(values) if values.is_empty() => {}
        SolveOutcome::Assigned(values) => renew(solver, round, &values, pending),
    }
}

/// Substitutes `values` into the basis, into `pending` and into the round
/// history, cascades through newly univariate polynomials, and repairs the
/// pair queue. Sets the solver's inconsistency flag when a contradiction
/// shows up.
pub fn renew(solver: &mut Solver<'_>, round: usize, values: &[(usize, bool)], pending: &mut Vec<Polynomial>) {
    let ring = solver.ring;
    let before: HashMap<usize, Monomial> = solver
        .engine
        .basis
        .live()
        .map(|g| (g, solver.engine.basis.leading(g).clone()))
        .collect();

    let mut todo = values.to_vec();
    loop {
        for &(var, value) in &todo {
            match solver.assignment.set(round, var, value) {
                Err(_) => {
                    solver.inconsistent = true;
                    return;
                }
                Ok(false) => continue,
                Ok(true) => solver.stats.record(StatEvent::VariableSolved),
            }
            let live: Vec<usize> = solver.engine.basis.live().collect();
            for g in live {
                let e = solver.engine.basis.entry_mut(g);
                if e.poly.mentions(var) {
                    e.poly = ring.substitute(&e.poly, var, value);
                    if e.poly.is_zero() {
                        e.live = false;
                    }
                }
            }
            for p in pending.iter_mut() {
                if p.mentions(var) {
                    *p = ring.substitute(p, var, value);
                }
            }
            pending.retain(|p| !p.is_zero());
            solver.history.substitute(ring, var, value);
        }
        if solver.cfg.reduce_renewed {
            reduce_rewritten(solver, &before, pending);
        }
        let basis = &solver.engine.basis;
        if basis.live().any(|g| basis.poly(g).is_one()) || pending.iter().any(Polynomial::is_one) {
            solver.inconsistent = true;
            return;
        }
        if !solver.cfg.cascade {
            break;
        }
        let mut pool = basis.live_polys();
        pool.extend(pending.iter().cloned());
        match solve_unique(ring, &extract_candidates(&pool)) {
            SolveOutcome::Inconsistent => {
                solver.inconsistent = true;
                return;
            }
            SolveOutcome::Assigned(next) if next.is_empty() => break,
            SolveOutcome::Assigned(next) => todo = next,
        }
    }

    // equal entries are kept once
    let mut seen: HashSet<Polynomial> = HashSet::new();
    let live: Vec<usize> = solver.engine.basis.live().collect();
    for g in live {
        let e = solver.engine.basis.entry_mut(g);
        if !seen.insert(e.poly.clone()) {
            e.live = false;
        }
    }
    // pending polynomials already in the basis add nothing
    pending.retain(|p| !seen.contains(p));
    let mut unique = HashSet::new();
    pending.retain(|p| unique.insert(p.clone()));

    let mut deleted = BTreeSet::new();
    let mut head_changed = BTreeSet::new();
    for (&g, head) in &before {
        let e = solver.engine.basis.entry_mut(g);
        if !e.live {
            deleted.insert(g);
        } else if e.poly.leading() != Some(head) {
            e.version += 1;
            head_changed.insert(g);
        }
    }
    match solver.cfg.renew_mode {
        RenewMode::Recompute => solver.engine.refresh(&head_changed, &deleted),
        RenewMode::Rebuild => solver.engine.rebuild(),
    }
    debug_assert!(solver.engine.queue_is_consistent());
}

/// Top-reduces, in field normal form, every basis entry whose leading term
/// moved under substitution and every pending polynomial, against the other
/// live entries. Two entries that now share a leading term would otherwise
/// come back as a pair of their own.
fn reduce_rewritten(solver: &mut Solver<'_>, before: &HashMap<usize, Monomial>, pending: &mut Vec<Polynomial>) {
    let ring = solver.ring;
    let basis = &mut solver.engine.basis;
    let moved: Vec<usize> = basis
        .live()
        .filter(|g| before.get(g).is_some_and(|h| basis.poly(*g).leading() != Some(h)))
        .collect();
    for g in moved {
        if !basis.is_live(g) {
            continue;
        }
        let reduced = {
            let others: Vec<&Polynomial> = basis.live().filter(|&k| k != g).map(|k| basis.poly(k)).collect();
            top_reduce_nf(ring, basis.poly(g), &others)
        };
        let e = basis.entry_mut(g);
        e.live = !reduced.is_zero();
        e.poly = reduced;
    }
    // pending polynomials also reduce each other so their heads stay distinct
    let mut done: Vec<Polynomial> = Vec::with_capacity(pending.len());
    for p in pending.drain(..) {
        let reducers: Vec<&Polynomial> = basis.live().map(|k| basis.poly(k)).chain(done.iter()).collect();
        let r = top_reduce_nf(ring, &p, &reducers);
        if !r.is_zero() {
            done.push(r);
        }
    }
    *pending = done;
}

/// Top-reduction modulo `reducers` and the field equations.
fn top_reduce_nf(ring: &Ring, p: &Polynomial, reducers: &[&Polynomial]) -> Polynomial {
    let mut r = p.clone();
    while let Some(head) = r.leading() {
        let best = reducers
            .iter()
            .filter_map(|q| q.leading().filter(|h| h.divides(head)).map(|h| (q, h)))
            .reduce(|a, b| if ring.compare(b.1, a.1).is_gt() { b } else { a });
        let Some((q, h)) = best else { break };
        let t = head.checked_div(h).unwrap();
        r = ring.normal_form_field(&ring.add(&r, &q.mul_monomial(&t)));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f4::{Algorithm, VariantConfig};
    use crate::poly::MonomialOrder;

    fn xy() -> Ring {
        Ring::new(vec!["x".into(), "y".into()], MonomialOrder::Grevlex).unwrap()
    }

    #[test]
    fn candidates_and_roots() {
        let r = xy();
        let x1 = r.add(&r.var(0), &r.one());
        let fe = r.field_equation(1);
        let xy_ = r.mul_monomial(&Monomial::var(2, 1), &r.var(0));
        let c = extract_candidates(&[x1.clone(), fe.clone(), xy_]);
        assert_eq!(c, vec![(x1.clone(), 0), (fe.clone(), 1)]);
        assert_eq!(solve_unique(&r, &c), SolveOutcome::Assigned(vec![(0, true)]));
        // x^2 + x + 1 has no root in GF(2)
        let bad = r.add(&fe, &r.one());
        assert_eq!(solve_unique(&r, &[(bad, 1)]), SolveOutcome::Inconsistent);
        let x0 = r.var(0);
        assert_eq!(solve_unique(&r, &[(x1, 0), (x0, 0)]), SolveOutcome::Inconsistent);
    }

    #[test]
    fn renew_solves_cascade() {
        // {xy + x, x + 1}: x = 1 turns xy + x into y + 1, so y = 1 and nothing remains
        let r = xy();
        let mut s = Solver::new(&r, VariantConfig::new(Algorithm::MsF4));
        let f = r.add(&r.mul_monomial(&Monomial::var(2, 1), &r.var(0)), &r.var(0));
        s.insert(f).unwrap();
        let mut pending = vec![r.add(&r.var(0), &r.one())];
        renew(&mut s, 1, &[(0, true)], &mut pending);
        assert!(!s.inconsistent);
        assert!(pending.is_empty());
        assert_eq!(s.assignment.iter().collect::<Vec<_>>(), vec![(0, true), (1, true)]);
        assert_eq!(s.engine.basis.live().count(), 0);
        assert!(s.engine.queue.is_empty());
    }

    #[test]
    fn renew_detects_contradiction() {
        // {x + y, x + y + 1}: x = 0 gives y and y + 1
        let r = xy();
        let mut s = Solver::new(&r, VariantConfig::new(Algorithm::MsF4));
        s.insert(r.add(&r.var(0), &r.var(1))).unwrap();
        s.insert(r.add(&r.add(&r.var(0), &r.var(1)), &r.one())).unwrap();
        renew(&mut s, 1, &[(0, false)], &mut Vec::new());
        assert!(s.inconsistent);
    }

    #[test]
    fn assignment_conflict() {
        let mut a = Assignment::default();
        assert_eq!(a.set(1, 0, true), Ok(true));
        assert_eq!(a.set(2, 0, true), Ok(false));
        assert_eq!(a.set(2, 0, false), Err(Conflict { var: 0 }));
        assert_eq!(a.events().len(), 1);
    }
}
