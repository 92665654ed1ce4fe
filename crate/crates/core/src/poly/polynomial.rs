use std::cmp::Ordering;

use super::monomial::{Monomial, MonomialOrder};

/// A polynomial over GF(2): a set of monomials, each with implicit coefficient 1.
///
/// Terms are kept strictly descending under the order the polynomial was
/// built with; the zero polynomial has no terms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<Monomial>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial {
            terms: vec![Monomial::one(nvars)],
        }
    }

    pub fn from_monomial(m: Monomial) -> Self {
        Polynomial { terms: vec![m] }
    }

    /// Builds a polynomial from an arbitrary term list: sorts under `order`
    /// and cancels repeated monomials in pairs.
    pub fn from_terms(mut terms: Vec<Monomial>, order: MonomialOrder) -> Self {
        terms.sort_unstable_by(|a, b| order.compare(b, a));
        let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
        for t in terms {
            if out.last() == Some(&t) {
                out.pop();
            } else {
                out.push(t);
            }
        }
        Polynomial { terms: out }
    }

    /// Wraps a term list that is already strictly descending under `order`.
    pub(crate) fn from_sorted_unchecked(terms: Vec<Monomial>) -> Self {
        Polynomial { terms }
    }

    #[inline]
    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Monomial> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading term; `None` for zero.
    #[inline]
    pub fn leading(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    /// Maximum total degree of any term; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn is_sorted_under(&self, order: MonomialOrder) -> bool {
        self.terms
            .windows(2)
            .all(|w| order.compare(&w[0], &w[1]) == Ordering::Greater)
    }

    pub fn mentions(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.exponent(var) > 0)
    }

    /// Sum over GF(2) (symmetric difference of the term sets).
    pub fn add(&self, other: &Polynomial, order: MonomialOrder) -> Polynomial {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match order.compare(&a[i], &b[j]) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Polynomial { terms: out }
    }

    /// `m * self`; admissibility keeps the term order intact.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        if m.is_one() {
            return self.clone();
        }
        Polynomial {
            terms: self.terms.iter().map(|t| t * m).collect(),
        }
    }

    /// Normal form modulo the field equations `x^2 + x`: every positive
    /// exponent becomes 1 and colliding monomials cancel in pairs.
    pub fn normal_form_field(&self, order: MonomialOrder) -> Polynomial {
        if self.terms.iter().all(Monomial::is_squarefree) {
            return self.clone();
        }
        Polynomial::from_terms(self.terms.iter().map(Monomial::squarefree).collect(), order)
    }

    /// Substitutes `var := value` and cancels collisions. The result never
    /// mentions `var`.
    pub fn substitute(&self, var: usize, value: bool, order: MonomialOrder) -> Polynomial {
        if !self.mentions(var) {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .filter_map(|t| match (t.exponent(var) > 0, value) {
                (false, _) => Some(t.clone()),
                (true, false) => None,
                (true, true) => Some(t.without(var)),
            })
            .collect();
        Polynomial::from_terms(terms, order)
    }

    /// The variable index when every non-constant term involves exactly that
    /// one variable; `None` for constants and multivariate polynomials.
    pub fn univariate_variable(&self) -> Option<usize> {
        let mut var = None;
        for t in &self.terms {
            if t.is_one() {
                continue;
            }
            let mut support = t.support();
            let v = support.next()?;
            if support.next().is_some() {
                return None;
            }
            match var {
                None => var = Some(v),
                Some(w) if w == v => {}
                Some(_) => return None,
            }
        }
        var
    }

    /// Value at a GF(2) point; bit `i` of `point` is the value of variable `i`.
    pub fn evaluate(&self, point: u64) -> bool {
        self.terms
            .iter()
            .filter(|t| t.support().all(|i| point >> i & 1 == 1))
            .count()
            % 2
            == 1
    }

    /// Value at a GF(2) point given as a slice of booleans.
    pub fn evaluate_at(&self, point: &[bool]) -> bool {
        self.terms.iter().filter(|t| t.support().all(|i| point[i])).count() % 2 == 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: MonomialOrder = MonomialOrder::Grevlex;

    fn p(terms: &[&[u16]]) -> Polynomial {
        Polynomial::from_terms(terms.iter().map(|e| Monomial::from_exponents(e)).collect(), G)
    }

    #[test]
    fn add_cancels() {
        let a = p(&[&[1, 1], &[1, 0]]);
        assert!(a.add(&a, G).is_zero());
        assert_eq!(a.add(&Polynomial::zero(), G), a);
    }

    #[test]
    fn from_terms_cancels_pairs() {
        let a = p(&[&[1, 0], &[1, 0], &[1, 0], &[0, 0]]);
        assert_eq!(a, p(&[&[1, 0], &[0, 0]]));
    }

    #[test]
    fn univariate_detection() {
        assert_eq!(p(&[&[1, 0], &[0, 0]]).univariate_variable(), Some(0));
        assert_eq!(p(&[&[1, 1], &[1, 0]]).univariate_variable(), None);
        assert_eq!(p(&[&[2, 0], &[1, 0], &[0, 0]]).univariate_variable(), Some(0));
        assert_eq!(p(&[&[0, 0]]).univariate_variable(), None);
    }

    #[test]
    fn substitution() {
        // xy + x with x = 1 -> y + 1 ; x = 0 -> 0
        let f = p(&[&[1, 1], &[1, 0]]);
        assert_eq!(f.substitute(0, true, G), p(&[&[0, 1], &[0, 0]]));
        assert!(f.substitute(0, false, G).is_zero());
        let g = p(&[&[0, 1], &[0, 0]]);
        assert_eq!(g.substitute(0, true, G), g);
    }

    #[test]
    fn evaluation_uses_boolean_semantics() {
        // x^2 + x vanishes everywhere on GF(2)
        let f = p(&[&[2, 0], &[1, 0]]);
        for pt in 0..4 {
            assert!(!f.evaluate(pt));
        }
    }
}
