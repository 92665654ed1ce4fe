use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use super::monomial::{Monomial, MonomialOrder};
use super::polynomial::Polynomial;
use crate::{Error, Result};

/// `GF(2)[x1, ..., xn]` with a fixed admissible order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    names: Vec<String>,
    order: MonomialOrder,
}

impl Ring {
    pub fn new(names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::EmptyRing);
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Ring { names, order })
    }

    /// Ring with variables named `x1 ... xn`.
    pub fn with_vars(n: usize, order: MonomialOrder) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")).collect(), order)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn with_order(&self, order: MonomialOrder) -> Ring {
        Ring {
            names: self.names.clone(),
            order,
        }
    }

    #[inline]
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.compare(a, b)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars())
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::from_monomial(Monomial::var(self.nvars(), i))
    }

    pub fn poly(&self, terms: Vec<Monomial>) -> Polynomial {
        Polynomial::from_terms(terms, self.order)
    }

    /// Re-sorts a polynomial built under another order.
    pub fn reorder(&self, p: &Polynomial) -> Polynomial {
        self.poly(p.terms().to_vec())
    }

    pub fn add(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        p.add(q, self.order)
    }

    pub fn mul_monomial(&self, m: &Monomial, p: &Polynomial) -> Polynomial {
        p.mul_monomial(m)
    }

    pub fn normal_form_field(&self, p: &Polynomial) -> Polynomial {
        p.normal_form_field(self.order)
    }

    pub fn field_equation(&self, var: usize) -> Polynomial {
        let n = self.nvars();
        let mut sq = Monomial::one(n);
        sq = &sq * &Monomial::var(n, var);
        sq = &sq * &Monomial::var(n, var);
        self.poly(vec![sq, Monomial::var(n, var)])
    }

    /// `(lcm/HT(f))*f + (lcm/HT(g))*g`; with `apply_nf` each product is put in
    /// field normal form before the sum.
    pub fn s_polynomial(&self, f: &Polynomial, g: &Polynomial, apply_nf: bool) -> Result<Polynomial> {
        let (hf, hg) = match (f.leading(), g.leading()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err(Error::ZeroPolynomial("s_polynomial")),
        };
        let lcm = hf.lcm(hg);
        let uf = lcm.checked_div(hf).expect("lcm is a multiple");
        let ug = lcm.checked_div(hg).expect("lcm is a multiple");
        let (mut a, mut b) = (f.mul_monomial(&uf), g.mul_monomial(&ug));
        if apply_nf {
            a = self.normal_form_field(&a);
            b = self.normal_form_field(&b);
        }
        let s = self.add(&a, &b);
        debug_assert!(s.leading().is_none_or(|h| self.compare(h, &lcm) == Ordering::Less));
        Ok(s)
    }

    /// Top-reduction of `p` by `basis`: stops once the leading term is not
    /// divisible by any leading term in the basis. Among applicable reducers
    /// the one with the largest leading term is used, ties going to the lowest
    /// index.
    pub fn top_reduce(&self, p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        // the remainder lives in an ordered set so that one step costs the
        // size of the reducer, not of the remainder
        let order = self.order;
        let mut r: BTreeSet<Ordered> = p.terms().iter().map(|t| Ordered(t.clone(), order)).collect();
        while let Some(Ordered(head, _)) = r.last() {
            let Some(g) = self.pick_reducer(head, basis) else {
                break;
            };
            let q = head.checked_div(g.leading().unwrap()).unwrap();
            for t in g.terms() {
                let m = Ordered(t * &q, order);
                if !r.remove(&m) {
                    r.insert(m);
                }
            }
        }
        Polynomial::from_sorted_unchecked(r.into_iter().rev().map(|o| o.0).collect())
    }

    /// Full reduction: no term of the result is divisible by a basis leading term.
    pub fn reduce_full(&self, p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        let mut done: Vec<Monomial> = Vec::new();
        let mut r = p.clone();
        loop {
            r = self.top_reduce(&r, basis);
            let Some(head) = r.leading().cloned() else {
                break;
            };
            // move the irreducible head aside and continue on the tail
            let tail = Polynomial::from_sorted_unchecked(r.terms()[1..].to_vec());
            done.push(head);
            r = tail;
        }
        Polynomial::from_sorted_unchecked(done)
    }

    fn pick_reducer<'a>(&self, head: &Monomial, basis: &'a [Polynomial]) -> Option<&'a Polynomial> {
        let mut best: Option<&Polynomial> = None;
        for g in basis {
            let Some(hg) = g.leading() else { continue };
            if !hg.divides(head) {
                continue;
            }
            match best {
                Some(b) if self.compare(hg, b.leading().unwrap()) != Ordering::Greater => {}
                _ => best = Some(g),
            }
        }
        best
    }

    /// Elements of `{0, 1}` at which a univariate polynomial in `var` vanishes.
    pub fn roots_gf2(&self, p: &Polynomial, var: usize) -> Vec<bool> {
        let n = self.nvars();
        [false, true]
            .into_iter()
            .filter(|&v| {
                let mut point = vec![false; n];
                point[var] = v;
                !p.evaluate_at(&point)
            })
            .collect()
    }

    pub fn substitute(&self, p: &Polynomial, var: usize, value: bool) -> Polynomial {
        p.substitute(var, value, self.order)
    }

    pub fn is_univariate(&self, p: &Polynomial) -> Result<Option<usize>> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial("is_univariate"));
        }
        Ok(p.univariate_variable())
    }

    /// Canonical text: `x1*x2^2 + x1 + 1`, zero as `0`.
    pub fn render(&self, p: &Polynomial) -> String {
        Display { ring: self, poly: p }.to_string()
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for i in m.support() {
            let e = m.exponent(i);
            if e == 1 {
                parts.push(self.names[i].clone());
            } else {
                parts.push(format!("{}^{}", self.names[i], e));
            }
        }
        parts.join("*")
    }

    pub fn display<'a>(&'a self, p: &'a Polynomial) -> Display<'a> {
        Display { ring: self, poly: p }
    }
}

pub struct Display<'a> {
    ring: &'a Ring,
    poly: &'a Polynomial,
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, t) in self.poly.terms().iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            f.write_str(&self.ring.render_monomial(t))?;
        }
        Ok(())
    }
}


/// Monomial ordered by the ring order, for ordered containers.
#[derive(Clone, PartialEq, Eq)]
struct Ordered(Monomial, MonomialOrder);

impl Ord for Ordered {
    fn cmp(&self, other: &Self) -> Ordering {
        self.1.compare(&self.0, &other.0)
    }
}

impl PartialOrd for Ordered {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
