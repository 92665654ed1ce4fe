//! The F4 main loop and its GF(2) variants.
//!
//! One [`Solver`] drives every variant; [`VariantConfig`] selects whether
//! field equations are adjoined, whether reduction matrices are seeded with
//! pair products or with field-normal-formed S-polynomial rows, and whether
//! middle solving runs after each round.

pub mod buchberger;
pub mod history;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rustc_hash::{FxHashMap, FxHashSet};

use crate::bench::stats::{RunStats, StatEvent};
use crate::matrix::{MacaulayMatrix, RowKind};
use crate::middle::{self, Assignment};
use crate::pairs::{CriticalPair, PairEngine};
use crate::poly::{Monomial, Polynomial, Ring};
use crate::{Error, Result};

pub use buchberger::buchberger_reference;
pub use history::{PolyId, Round, RoundHistory};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    PlainF4,
    FeF4,
    SF4,
    MsF4,
}

impl Algorithm {
    pub const ALL: [Algorithm; 4] = [Algorithm::PlainF4, Algorithm::FeF4, Algorithm::SF4, Algorithm::MsF4];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::PlainF4 => "f4",
            Algorithm::FeF4 => "fe-f4",
            Algorithm::SF4 => "s-f4",
            Algorithm::MsF4 => "ms-f4",
        }
    }

    /// Seeds matrices with S-polynomial rows and normal-forms every product.
    pub fn uses_spoly_rows(self) -> bool {
        matches!(self, Algorithm::SF4 | Algorithm::MsF4)
    }

    pub fn middle_solving(self) -> bool {
        self == Algorithm::MsF4
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown algorithm `{s}`")))
    }
}

/// How middle solving repairs the pair queue after a substitution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum RenewMode {
    /// Keep pairs between untouched entries, recompute the rest.
    #[default]
    Recompute,
    /// Drop the queue and re-install every live entry.
    Rebuild,
}

impl FromStr for RenewMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "recompute" => Ok(RenewMode::Recompute),
            "rebuild" => Ok(RenewMode::Rebuild),
            _ => Err(Error::Config(format!("unknown renew mode `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VariantConfig {
    pub algorithm: Algorithm,
    pub adjoin_field_eqs: bool,
    pub renew_mode: RenewMode,
    /// Keep solving univariate basis entries produced by a substitution.
    pub cascade: bool,
    /// Top-reduce basis entries whose leading term changed under substitution.
    pub reduce_renewed: bool,
    /// Number of most recent rounds kept for `Simplify`; `None` keeps all.
    pub history_cap: Option<usize>,
}

impl VariantConfig {
    pub fn new(algorithm: Algorithm) -> Self {
        VariantConfig {
            algorithm,
            adjoin_field_eqs: algorithm != Algorithm::PlainF4,
            renew_mode: RenewMode::default(),
            cascade: true,
            reduce_renewed: true,
            history_cap: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.algorithm.uses_spoly_rows() && !self.adjoin_field_eqs {
            return Err(Error::Config(format!(
                "{} requires the field equations to be adjoined",
                self.algorithm
            )));
        }
        Ok(())
    }
}

/// Result of a run.
#[derive(Clone, Debug)]
pub struct Outcome {
    /// Reduced Gröbner basis, ascending by leading term; `[1]` when the
    /// system has no solution.
    pub basis: Vec<Polynomial>,
    /// Variables fixed by middle solving (empty for other variants).
    pub assignment: Assignment,
    pub stats: RunStats,
    pub inconsistent: bool,
    /// Largest total degree of any polynomial produced by a reduction round
    /// and inserted into the basis.
    pub max_new_degree: u32,
}

impl Outcome {
    /// Reduced basis of the whole ideal: `basis` together with `x_i + a_i`
    /// for every variable fixed by middle solving.
    pub fn full_basis(&self, ring: &Ring) -> Vec<Polynomial> {
        if self.inconsistent || self.assignment.is_empty() {
            return self.basis.clone();
        }
        let mut all = self.basis.clone();
        for (var, value) in self.assignment.iter() {
            let mut p = ring.var(var);
            if value {
                p = ring.add(&p, &ring.one());
            }
            all.push(p);
        }
        interreduce(ring, &all)
    }
}

/// `F ∪ {x_i^2 + x_i}` without duplicates.
pub fn adjoin_field_equations(ring: &Ring, system: &[Polynomial]) -> Vec<Polynomial> {
    let mut seen = FxHashSet::default();
    system
        .iter()
        .cloned()
        .chain((0..ring.nvars()).map(|i| ring.field_equation(i)))
        .filter(|p| !p.is_zero() && seen.insert(p.clone()))
        .collect()
}

/// Computes a Gröbner basis of `system` with the configured variant.
pub fn solve(ring: &Ring, system: &[Polynomial], cfg: &VariantConfig) -> Result<Outcome> {
    cfg.validate()?;
    let mut inputs: Vec<Polynomial> = system.iter().filter(|p| !p.is_zero()).cloned().collect();
    if inputs.is_empty() {
        return Err(Error::EmptySystem);
    }
    if cfg.algorithm.uses_spoly_rows() {
        inputs = inputs
            .iter()
            .map(|p| ring.normal_form_field(p))
            .filter(|p| !p.is_zero())
            .collect();
    }
    if cfg.adjoin_field_eqs {
        inputs = adjoin_field_equations(ring, &inputs);
    }
    let mut solver = Solver::new(ring, cfg.clone());
    if inputs.iter().any(Polynomial::is_one) {
        solver.inconsistent = true;
    } else {
        for p in inputs {
            solver.insert(p)?;
        }
        if cfg.algorithm.middle_solving() {
            middle::initial_pass(&mut solver);
        }
        solver.run()?;
    }
    Ok(solver.finish())
}

/// One row of a reduction matrix before elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRow {
    pub poly: Polynomial,
    pub kind: RowKind,
    /// `(t, f)` when the row is the plain product `t * f`.
    pub product: Option<(Monomial, PolyId)>,
}

/// What one call of `Reduction` produced.
#[derive(Clone, Debug)]
pub struct RoundOutput {
    /// Echelon rows carrying new leading terms (`F~+`).
    pub new: Vec<Polynomial>,
    /// Matrix input `F`.
    pub rows: Vec<MatrixRow>,
    /// Echelon form `F~`.
    pub echelon: Vec<Polynomial>,
}

impl RoundOutput {
    pub fn reducers(&self) -> usize {
        self.rows.iter().filter(|r| r.kind == RowKind::Reducer).count()
    }
}

/// Mutable state of an F4 run: basis, pair queue, round history and counters.
pub struct Solver<'r> {
    pub(crate) ring: &'r Ring,
    pub(crate) cfg: VariantConfig,
    pub(crate) engine: PairEngine,
    pub(crate) history: RoundHistory,
    pub(crate) assignment: Assignment,
    pub(crate) stats: RunStats,
    pub(crate) max_new_degree: u32,
    pub(crate) inconsistent: bool,
}

impl<'r> Solver<'r> {
    pub fn new(ring: &'r Ring, cfg: VariantConfig) -> Self {
        let engine = if cfg.algorithm.middle_solving() {
            PairEngine::with_drop_log()
        } else {
            PairEngine::new()
        };
        Solver {
            ring,
            history: RoundHistory::new(cfg.history_cap),
            cfg,
            engine,
            assignment: Assignment::default(),
            stats: RunStats::default(),
            max_new_degree: 0,
            inconsistent: false,
        }
    }

    pub fn ring(&self) -> &Ring {
        self.ring
    }

    pub fn engine(&self) -> &PairEngine {
        &self.engine
    }

    pub fn history(&self) -> &RoundHistory {
        &self.history
    }

    pub fn assignment(&self) -> &Assignment {
        &self.assignment
    }

    pub fn stats(&self) -> &RunStats {
        &self.stats
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    /// Installs a polynomial into the basis through `Update`.
    pub fn insert(&mut self, p: Polynomial) -> Result<usize> {
        self.engine.update(p)
    }

    pub fn basis_id(&self, index: usize) -> PolyId {
        PolyId::Basis {
            index,
            version: self.engine.basis.entry(index).version,
        }
    }

    pub fn poly_of(&self, id: PolyId) -> &Polynomial {
        match id {
            PolyId::Basis { index, .. } => self.engine.basis.poly(index),
            PolyId::Echelon { round, row } => self
                .history
                .echelon_row(round, row)
                .expect("simplify only returns retained rows"),
        }
    }

    fn product(&self, t: &Monomial, id: PolyId) -> Polynomial {
        self.poly_of(id).mul_monomial(t)
    }

    /// Replaces `t * f` by `t' * p` with the same leading term, where `p` is an
    /// echelon row of an earlier round, taking the largest divisor `u` of `t`
    /// for which `u * f` was a row of that round.
    pub fn simplify(&self, t: &Monomial, f: PolyId) -> (Monomial, PolyId) {
        let head_f = self.poly_of(f).leading().expect("nonzero").clone();
        let mut candidates: Vec<(&Monomial, usize)> = Vec::new();
        for (j, round) in self.history.iter_recent() {
            if let PolyId::Echelon { round: from, .. } = f {
                if j <= from {
                    continue;
                }
            }
            candidates.extend(round.multipliers_of(&f).iter().filter(|u| u.divides(t)).map(|u| (u, j)));
        }
        // stable: equal multipliers keep the most recent round first
        candidates.sort_by(|a, b| self.ring.compare(b.0, a.0));
        for (u, j) in candidates {
            let head = u * &head_f;
            let Some(row) = self.history.get(j).and_then(|r| r.echelon_with_head(&head)) else {
                continue;
            };
            let p = PolyId::Echelon { round: j, row };
            let result = if u == t {
                (Monomial::one(self.ring.nvars()), p)
            } else {
                self.simplify(&t.checked_div(u).unwrap(), p)
            };
            debug_assert_eq!(
                self.poly_of(result.1).leading().map(|h| &result.0 * h),
                Some(t * &head_f)
            );
            return result;
        }
        (t.clone(), f)
    }

    /// Active basis entries as reducers, largest leading term first.
    fn reducer_table(&self) -> Vec<(usize, Monomial)> {
        let mut table: Vec<(usize, Monomial)> = self
            .engine
            .basis
            .active()
            .map(|g| (g, self.engine.basis.leading(g).clone()))
            .collect();
        table.sort_by(|a, b| self.ring.compare(&b.1, &a.1).then(a.0.cmp(&b.0)));
        table
    }

    /// Closes `rows` under reduction: every monomial that is top-reducible by
    /// the basis and not yet done gets one reducer row.
    fn preprocess(&self, mut rows: Vec<MatrixRow>, seed_heads_done: bool, nf: bool) -> Vec<MatrixRow> {
        let reducers = self.reducer_table();
        let mut seen: FxHashSet<Monomial> = FxHashSet::default();
        if seed_heads_done {
            seen.extend(rows.iter().filter_map(|r| r.poly.leading().cloned()));
        }
        let mut work: Vec<Monomial> = Vec::new();
        for r in &rows {
            for t in r.poly.terms() {
                if seen.insert(t.clone()) {
                    work.push(t.clone());
                }
            }
        }
        while let Some(m) = work.pop() {
            let Some((g, head)) = reducers.iter().find(|(_, h)| h.degree() <= m.degree() && h.divides(&m)) else {
                continue;
            };
            let multiplier = m.checked_div(head).unwrap();
            let (t, id) = self.simplify(&multiplier, self.basis_id(*g));
            let mut poly = self.product(&t, id);
            if nf {
                poly = self.ring.normal_form_field(&poly);
            }
            debug_assert_eq!(poly.leading(), Some(&m));
            for term in poly.terms() {
                if seen.insert(term.clone()) {
                    work.push(term.clone());
                }
            }
            rows.push(MatrixRow {
                poly,
                kind: RowKind::Reducer,
                product: Some((t, id)),
            });
        }
        rows
    }

    /// Classic symbolic preprocessing: both simplified products of every pair,
    /// then reducers for all non-leading monomials.
    pub fn symbolic_preprocessing_classic(&self, pairs: &[CriticalPair]) -> Vec<MatrixRow> {
        let mut keys = FxHashSet::default();
        let mut rows = Vec::new();
        for pair in pairs {
            for (u, i) in [&pair.left, &pair.right] {
                let (t, id) = self.simplify(u, self.basis_id(*i));
                if keys.insert((t.clone(), id)) {
                    rows.push(MatrixRow {
                        poly: self.product(&t, id),
                        kind: RowKind::PairProduct,
                        product: Some((t, id)),
                    });
                }
            }
        }
        self.preprocess(rows, true, false)
    }

    /// S-polynomial preprocessing: one field-normal-formed S-polynomial row
    /// per pair (zero rows dropped), then normal-formed reducers for every
    /// reducible monomial, including the seed leading terms.
    pub fn symbolic_preprocessing_spoly(&self, pairs: &[CriticalPair]) -> Vec<MatrixRow> {
        let mut seen = FxHashSet::default();
        let mut products: FxHashMap<(Monomial, PolyId), Polynomial> = FxHashMap::default();
        let mut rows = Vec::new();
        for pair in pairs {
            let mut side = |(u, i): &(Monomial, usize)| {
                let key = self.simplify(u, self.basis_id(*i));
                products
                    .entry(key)
                    .or_insert_with_key(|(t, id)| self.ring.normal_form_field(&self.product(t, *id)))
                    .clone()
            };
            let left = side(&pair.left);
            let s = self.ring.add(&left, &side(&pair.right));
            if !s.is_zero() && seen.insert(s.clone()) {
                rows.push(MatrixRow {
                    poly: s,
                    kind: RowKind::SPolynomial,
                    product: None,
                });
            }
        }
        self.preprocess(rows, false, true)
    }

    /// `Reduction`: preprocessing, elimination, and selection of the echelon
    /// rows with new leading terms. Classic rows are new when their leading
    /// term is not a leading term of the input rows; S-polynomial rows when it
    /// is not a reducer leading term.
    pub fn reduction(&self, pairs: &[CriticalPair]) -> RoundOutput {
        let spoly = self.cfg.algorithm.uses_spoly_rows();
        let rows = if spoly {
            self.symbolic_preprocessing_spoly(pairs)
        } else {
            self.symbolic_preprocessing_classic(pairs)
        };
        let echelon = if rows.is_empty() {
            Vec::new()
        } else {
            MacaulayMatrix::from_polys(self.ring, rows.iter().map(|r| (&r.poly, r.kind)))
                .row_echelon()
                .to_polys()
        };
        let old_heads: FxHashSet<&Monomial> = rows
            .iter()
            .filter(|r| !spoly || r.kind == RowKind::Reducer)
            .filter_map(|r| r.poly.leading())
            .collect();
        let new = echelon
            .iter()
            .filter(|p| !old_heads.contains(p.leading().unwrap()))
            .cloned()
            .collect();
        RoundOutput { new, rows, echelon }
    }

    /// Runs selection/reduction/update until the pair queue is empty.
    pub fn run(&mut self) -> Result<()> {
        while !self.engine.queue.is_empty() && !self.inconsistent {
            self.step()?;
        }
        Ok(())
    }

    /// One round of the main loop.
    pub fn step(&mut self) -> Result<()> {
        let pairs = self.engine.queue.select()?;
        self.stats.record(StatEvent::PairsSelected(pairs.len()));
        let started = Instant::now();
        let out = self.reduction(&pairs);
        self.stats.record(StatEvent::ReductionTime(started.elapsed()));
        self.stats.record(StatEvent::MatrixBuilt { rows: out.rows.len() });
        for _ in 0..out.reducers() {
            self.stats.record(StatEvent::ReducerAppended);
        }
        self.stats.record(StatEvent::RoundCompleted);

        let round = self.history.next_round();
        let RoundOutput { mut new, rows, echelon } = out;
        let mut products = Vec::new();
        let mut inputs = Vec::with_capacity(rows.len());
        for r in rows {
            if let Some(key) = r.product {
                products.push(key);
            }
            inputs.push(r.poly);
        }
        self.history.push(Round::new(inputs, products, echelon));

        if new.iter().any(Polynomial::is_one) {
            self.inconsistent = true;
            return Ok(());
        }
        let solved_before = self.assignment.len();
        if self.cfg.algorithm.middle_solving() {
            middle::after_round(self, round, &mut new);
            if self.inconsistent {
                return Ok(());
            }
        }
        if cfg!(debug_assertions) && self.assignment.len() == solved_before {
            let heads: Vec<&Monomial> = self
                .engine
                .basis
                .active()
                .map(|g| self.engine.basis.leading(g))
                .collect();
            for h in &new {
                let lead = h.leading().unwrap();
                debug_assert!(!heads.iter().any(|g| g.divides(lead)), "new polynomial is reducible");
            }
        }
        for h in new {
            if self.cfg.adjoin_field_eqs {
                assert!(
                    h.degree() as usize <= self.ring.nvars(),
                    "degree {} exceeds the number of variables",
                    h.degree()
                );
            }
            self.max_new_degree = self.max_new_degree.max(h.degree());
            self.insert(h)?;
        }
        Ok(())
    }

    pub fn finish(self) -> Outcome {
        let mut stats = self.stats;
        let live = self.engine.basis.live_polys();
        stats.gb_size_unreduced = live.len();
        stats.h_deg_gb_unreduced = live.iter().map(Polynomial::degree).max().unwrap_or(0);
        let basis = if self.inconsistent {
            vec![self.ring.one()]
        } else {
            interreduce(self.ring, &live)
        };
        stats.gb_size = basis.len();
        stats.h_deg_gb = basis.iter().map(Polynomial::degree).max().unwrap_or(0);
        Outcome {
            basis,
            assignment: self.assignment,
            stats,
            inconsistent: self.inconsistent,
            max_new_degree: self.max_new_degree,
        }
    }
}

/// Reduced Gröbner basis from a Gröbner basis: keeps the elements with
/// minimal leading terms and fully reduces them with one matrix elimination.
/// The result is sorted ascending by leading term.
pub fn interreduce(ring: &Ring, polys: &[Polynomial]) -> Vec<Polynomial> {
    let mut sorted: Vec<&Polynomial> = polys.iter().filter(|p| !p.is_zero()).collect();
    if sorted.iter().any(|p| p.is_one()) {
        return vec![ring.one()];
    }
    // a divisor never comes after its multiple in an admissible order
    sorted.sort_by(|a, b| ring.compare(a.leading().unwrap(), b.leading().unwrap()));
    let mut minimal: Vec<&Polynomial> = Vec::new();
    for p in sorted {
        let h = p.leading().unwrap();
        if !minimal.iter().any(|q| q.leading().unwrap().divides(h)) {
            minimal.push(p);
        }
    }
    if minimal.is_empty() {
        return Vec::new();
    }
    let heads: FxHashSet<&Monomial> = minimal.iter().map(|p| p.leading().unwrap()).collect();
    let mut reducers: Vec<&Polynomial> = minimal.clone();
    reducers.sort_by(|a, b| ring.compare(b.leading().unwrap(), a.leading().unwrap()));

    let mut rows: Vec<Polynomial> = minimal.iter().map(|p| (*p).clone()).collect();
    let mut seen: FxHashSet<Monomial> = heads.iter().map(|m| (*m).clone()).collect();
    let mut work: Vec<Monomial> = Vec::new();
    for p in &rows {
        for t in &p.terms()[1..] {
            if seen.insert(t.clone()) {
                work.push(t.clone());
            }
        }
    }
    while let Some(m) = work.pop() {
        let Some(g) = reducers.iter().find(|g| g.leading().unwrap().divides(&m)) else {
            continue;
        };
        let row = g.mul_monomial(&m.checked_div(g.leading().unwrap()).unwrap());
        for t in &row.terms()[1..] {
            if seen.insert(t.clone()) {
                work.push(t.clone());
            }
        }
        rows.push(row);
    }
    let matrix = MacaulayMatrix::from_polys(ring, rows.iter().map(|p| (p, RowKind::Reducer)));
    let mut out: Vec<Polynomial> = matrix
        .row_echelon()
        .to_polys()
        .into_iter()
        .filter(|p| heads.contains(p.leading().unwrap()))
        .collect();
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    fn xyz() -> Ring {
        Ring::new(vec!["x".into(), "y".into(), "z".into()], MonomialOrder::Grevlex).unwrap()
    }

    fn p(r: &Ring, terms: &[[u16; 3]]) -> Polynomial {
        r.poly(terms.iter().map(|e| Monomial::from_exponents(e)).collect())
    }

    #[test]
    fn adjoin_counts_and_dedupes() {
        let r = Ring::with_vars(2, MonomialOrder::Grevlex).unwrap();
        let f = r.add(&r.var(0), &r.var(1));
        let out = adjoin_field_equations(&r, std::slice::from_ref(&f));
        assert_eq!(out.len(), 3);
        let out2 = adjoin_field_equations(&r, &[f, r.field_equation(0)]);
        assert_eq!(out2.len(), 3);
    }

    #[test]
    fn empty_system_is_error() {
        let r = xyz();
        assert!(solve(&r, &[], &VariantConfig::new(Algorithm::FeF4)).is_err());
        assert!(solve(&r, &[Polynomial::zero()], &VariantConfig::new(Algorithm::FeF4)).is_err());
    }

    #[test]
    fn spoly_variants_need_field_equations() {
        let mut cfg = VariantConfig::new(Algorithm::SF4);
        cfg.adjoin_field_eqs = false;
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn simplify_without_history_is_identity() {
        let r = xyz();
        let mut s = Solver::new(&r, VariantConfig::new(Algorithm::FeF4));
        s.insert(p(&r, &[[1, 1, 0], [1, 0, 0]])).unwrap();
        let t = Monomial::from_exponents(&[0, 0, 1]);
        assert_eq!(s.simplify(&t, s.basis_id(0)), (t.clone(), s.basis_id(0)));
    }

    #[test]
    fn worked_example_preprocessing_classic() {
        // I = <xy + x, yz + z + 1, xz + 1, x + y + z>, pair C(f1, f2)
        let r = xyz();
        let mut s = Solver::new(&r, VariantConfig::new(Algorithm::FeF4));
        let f1 = s.insert(p(&r, &[[1, 1, 0], [1, 0, 0]])).unwrap();
        let f2 = s.insert(p(&r, &[[0, 1, 1], [0, 0, 1], [0, 0, 0]])).unwrap();
        let pair = crate::pairs::make_pair(f1, f2, &s.engine.basis).unwrap();
        s.insert(p(&r, &[[1, 0, 1], [0, 0, 0]])).unwrap();
        s.insert(p(&r, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]])).unwrap();
        let rows = s.symbolic_preprocessing_classic(std::slice::from_ref(&pair));
        let seeds: Vec<String> = rows
            .iter()
            .filter(|r| r.kind == RowKind::PairProduct)
            .map(|row| r.render(&row.poly))
            .collect();
        assert_eq!(seeds, vec!["x*y*z + x*z", "x*y*z + x*z + x"]);
        let reducer_heads: FxHashSet<String> = rows
            .iter()
            .filter(|r| r.kind == RowKind::Reducer)
            .map(|row| r.render_monomial(row.poly.leading().unwrap()))
            .collect();
        assert!(reducer_heads.contains("x*z") && reducer_heads.contains("x"));

        // the S-polynomial path only needs to reduce x
        let mut s2 = Solver::new(&r, VariantConfig::new(Algorithm::SF4));
        for q in [
            p(&r, &[[1, 1, 0], [1, 0, 0]]),
            p(&r, &[[0, 1, 1], [0, 0, 1], [0, 0, 0]]),
            p(&r, &[[1, 0, 1], [0, 0, 0]]),
            p(&r, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
        ] {
            s2.insert(q).unwrap();
        }
        let rows2 = s2.symbolic_preprocessing_spoly(&[pair]);
        assert_eq!(r.render(&rows2[0].poly), "x");
        assert_eq!(rows2[0].kind, RowKind::SPolynomial);
        let first_reducer = rows2.iter().find(|r| r.kind == RowKind::Reducer).unwrap();
        assert_eq!(r.render_monomial(first_reducer.poly.leading().unwrap()), "x");
        assert!(!rows2
            .iter()
            .any(|row| row.kind == RowKind::Reducer && r.render_monomial(row.poly.leading().unwrap()) == "x*z"));
    }

    #[test]
    fn worked_example_normal_form_seed() {
        // I = <xy + yz, xz + yz + 1, xy + x>, pair C(f1, f2) gives the row y
        let r = xyz();
        let mut s = Solver::new(&r, VariantConfig::new(Algorithm::SF4));
        let f1 = s.insert(p(&r, &[[1, 1, 0], [0, 1, 1]])).unwrap();
        let f2 = s.insert(p(&r, &[[1, 0, 1], [0, 1, 1], [0, 0, 0]])).unwrap();
        let pair = crate::pairs::make_pair(f1, f2, &s.engine.basis).unwrap();
        let rows = s.symbolic_preprocessing_spoly(&[pair]);
        assert_eq!(r.render(&rows[0].poly), "y");
    }

    #[test]
    fn reduction_finds_new_x() {
        // with only f1, f2 in the basis the S-polynomial x is new information
        let r = xyz();
        for alg in [Algorithm::FeF4, Algorithm::SF4] {
            let mut s = Solver::new(&r, VariantConfig::new(alg));
            s.insert(p(&r, &[[1, 1, 0], [1, 0, 0]])).unwrap();
            s.insert(p(&r, &[[0, 1, 1], [0, 0, 1], [0, 0, 0]])).unwrap();
            let pairs = s.engine.queue.clone().select().unwrap();
            let out = s.reduction(&pairs);
            assert_eq!(
                out.new.iter().map(|q| r.render(q)).collect::<Vec<_>>(),
                vec!["x"],
                "{alg}"
            );
        }
    }

    #[test]
    fn spoly_round_with_no_reducers_keeps_all_rows() {
        let r = xyz();
        let mut s = Solver::new(&r, VariantConfig::new(Algorithm::SF4));
        s.insert(p(&r, &[[1, 1, 0], [0, 0, 1]])).unwrap();
        s.insert(p(&r, &[[1, 0, 1], [0, 0, 0]])).unwrap();
        let pairs = s.engine.queue.clone().select().unwrap();
        let out = s.reduction(&pairs);
        assert_eq!(out.reducers(), 0);
        assert_eq!(out.new, out.echelon);
    }

    #[test]
    fn simplify_reuses_echelon_rows() {
        // two rounds on a 3-variable system; afterwards a product t*f that was
        // a row of round 1 is replaced by the matching echelon row
        let r = xyz();
        let mut s = Solver::new(&r, VariantConfig::new(Algorithm::FeF4));
        s.insert(p(&r, &[[1, 1, 0], [0, 0, 1]])).unwrap();
        s.insert(p(&r, &[[1, 0, 1], [0, 1, 0]])).unwrap();
        s.insert(p(&r, &[[0, 1, 1], [1, 0, 0], [0, 0, 0]])).unwrap();
        s.step().unwrap();
        let round = s.history.get(1).unwrap();
        let (id, us) = round
            .products()
            .find(|(id, _)| matches!(id, PolyId::Basis { .. }))
            .map(|(id, us)| (*id, us.to_vec()))
            .unwrap();
        let u = us[0].clone();
        // same multiplier: whole product replaced
        let (t1, p1) = s.simplify(&u, id);
        assert!(t1.is_one());
        assert!(matches!(p1, PolyId::Echelon { round: 1, .. }));
        let head = &u * s.poly_of(id).leading().unwrap();
        assert_eq!(s.poly_of(p1).leading(), Some(&head));
        // strict multiple: recursion on t/u
        let x = Monomial::var(3, 0);
        let t = &u * &x;
        let (t2, p2) = s.simplify(&t, id);
        assert_eq!(
            s.poly_of(p2).leading().map(|h| &t2 * h),
            Some(&t * s.poly_of(id).leading().unwrap())
        );
        assert!(matches!(p2, PolyId::Echelon { .. }));
    }

    #[test]
    fn interreduce_gives_reduced_basis() {
        let r = xyz();
        // {x + y, y + 1, x*y + x} -> {y + 1, x + 1}
        let g = vec![
            p(&r, &[[1, 0, 0], [0, 1, 0]]),
            p(&r, &[[0, 1, 0], [0, 0, 0]]),
            p(&r, &[[1, 1, 0], [1, 0, 0]]),
        ];
        let out = interreduce(&r, &g);
        assert_eq!(
            out.iter().map(|q| r.render(q)).collect::<Vec<_>>(),
            vec!["y + 1", "x + 1"]
        );
    }
}
