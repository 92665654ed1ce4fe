use std::collections::VecDeque;

use rustc_hash::FxHashMap;

use crate::poly::{Monomial, Polynomial, Ring};

/// Identity of a polynomial that can act as the `f` of a product `u * f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolyId {
    Basis { index: usize, version: u32 },
    Echelon { round: usize, row: usize },
}

/// One elimination round: the matrix input `F_k` and its echelon form.
#[derive(Clone, Debug, Default)]
pub struct Round {
    pub inputs: Vec<Polynomial>,
    /// Multipliers `u` of the rows of `F_k` that were plain products `u * f`.
    products: FxHashMap<PolyId, Vec<Monomial>>,
    pub echelon: Vec<Option<Polynomial>>,
    by_head: FxHashMap<Monomial, usize>,
}

impl Round {
    pub fn new(inputs: Vec<Polynomial>, products: Vec<(Monomial, PolyId)>, echelon: Vec<Polynomial>) -> Self {
        let mut map: FxHashMap<PolyId, Vec<Monomial>> = FxHashMap::default();
        for (u, id) in products {
            map.entry(id).or_default().push(u);
        }
        let mut r = Round {
            inputs,
            products: map,
            echelon: echelon.into_iter().map(Some).collect(),
            by_head: FxHashMap::default(),
        };
        r.index_heads();
        r
    }

    fn index_heads(&mut self) {
        self.by_head = self
            .echelon
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.as_ref().and_then(|p| p.leading()).map(|h| (h.clone(), i)))
            .collect();
    }

    pub fn echelon_with_head(&self, head: &Monomial) -> Option<usize> {
        self.by_head.get(head).copied()
    }

    /// `(f, [u, ...])` for every product row `u * f` of the round.
    pub fn products(&self) -> impl Iterator<Item = (&PolyId, &[Monomial])> {
        self.products.iter().map(|(id, us)| (id, us.as_slice()))
    }

    pub fn multipliers_of(&self, id: &PolyId) -> &[Monomial] {
        self.products.get(id).map_or(&[], Vec::as_slice)
    }
}

/// `(F_k, F~_k)` for the retained rounds; rounds are numbered from 1.
#[derive(Clone, Debug, Default)]
pub struct RoundHistory {
    rounds: VecDeque<Round>,
    first: usize,
    cap: Option<usize>,
}

impl RoundHistory {
    pub fn new(cap: Option<usize>) -> Self {
        RoundHistory {
            rounds: VecDeque::new(),
            first: 1,
            cap,
        }
    }

    /// Number of the next round to be pushed.
    pub fn next_round(&self) -> usize {
        self.first + self.rounds.len()
    }

    pub fn push(&mut self, round: Round) {
        self.rounds.push_back(round);
        if let Some(cap) = self.cap {
            while self.rounds.len() > cap {
                self.rounds.pop_front();
                self.first += 1;
            }
        }
    }

    pub fn get(&self, round: usize) -> Option<&Round> {
        round.checked_sub(self.first).and_then(|k| self.rounds.get(k))
    }

    /// Retained rounds, most recent first.
    pub fn iter_recent(&self) -> impl Iterator<Item = (usize, &Round)> {
        let first = self.first;
        self.rounds.iter().enumerate().rev().map(move |(k, r)| (first + k, r))
    }

    pub fn len(&self) -> usize {
        self.rounds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }

    pub fn echelon_row(&self, round: usize, row: usize) -> Option<&Polynomial> {
        self.get(round)
            .and_then(|r| r.echelon.get(row))
            .and_then(Option::as_ref)
    }

    /// Applies `var := value` to every stored row. Zero rows are removed, and
    /// so are echelon rows whose leading term changed.
    pub fn substitute(&mut self, ring: &Ring, var: usize, value: bool) {
        for round in &mut self.rounds {
            round.inputs = std::mem::take(&mut round.inputs)
                .into_iter()
                .map(|p| ring.substitute(&p, var, value))
                .filter(|p| !p.is_zero())
                .collect();
            for slot in &mut round.echelon {
                if let Some(p) = slot {
                    if p.mentions(var) {
                        let head_moves = p.leading().unwrap().exponent(var) > 0;
                        let q = ring.substitute(p, var, value);
                        *slot = if q.is_zero() || head_moves { None } else { Some(q) };
                    }
                }
            }
            round.index_heads();
        }
    }

    pub fn mentions(&self, var: usize) -> bool {
        self.rounds
            .iter()
            .any(|r| r.inputs.iter().any(|p| p.mentions(var)) || r.echelon.iter().flatten().any(|p| p.mentions(var)))
    }
}
