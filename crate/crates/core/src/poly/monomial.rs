use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::Error;

pub type Exponent = u16;

/// A power product `x1^e1 * ... * xn^en` over a fixed variable list.
///
/// The total degree is cached and kept equal to the exponent sum.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[Exponent; 16]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
            degree: exps.iter().map(|&e| e as u32).sum(),
        }
    }

    /// Squarefree monomial whose variables are the set bits of `mask`.
    pub fn from_mask(nvars: usize, mask: u64) -> Self {
        let mut m = Self::one(nvars);
        for i in 0..nvars {
            if mask >> i & 1 == 1 {
                m.exps[i] = 1;
                m.degree += 1;
            }
        }
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn exponent(&self, var: usize) -> Exponent {
        self.exps[var]
    }

    /// Indices of the variables occurring in the monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Bit mask of the variables present (only the first 64 variables are representable).
    pub fn support_mask(&self) -> u64 {
        debug_assert!(self.nvars() <= 64);
        self.support().fold(0u64, |acc, i| acc | 1 << i)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: SmallVec<[Exponent; 16]> = self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    /// `true` when `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, or `None` when `divisor` does not divide `self`.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if !divisor.divides(self) {
            return None;
        }
        let exps = self.exps.iter().zip(&divisor.exps).map(|(&a, &b)| a - b).collect();
        Some(Monomial {
            exps,
            degree: self.degree - divisor.degree,
        })
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Every exponent above one clamped to one.
    pub fn squarefree(&self) -> Monomial {
        let exps: SmallVec<[Exponent; 16]> = self.exps.iter().map(|&e| e.min(1)).collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    /// The monomial with variable `var` removed.
    pub fn without(&self, var: usize) -> Monomial {
        let mut m = self.clone();
        m.degree -= m.exps[var] as u32;
        m.exps[var] = 0;
        m
    }

    /// All divisors in no particular order.
    pub fn divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(self.nvars())];
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let len = out.len();
            for k in 1..=e {
                for j in 0..len {
                    let mut d = out[j].clone();
                    d.exps[i] = k;
                    d.degree += k as u32;
                    out.push(d);
                }
            }
        }
        out
    }
}

impl std::ops::Mul for &Monomial {
    type Output = Monomial;

    fn mul(self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&rhs.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial {
            exps,
            degree: self.degree + rhs.degree,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Admissible term orders over `x1 > x2 > ... > xn`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Grevlex,
    Lex,
}

impl MonomialOrder {
    pub fn compare(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            MonomialOrder::Grevlex => a.degree.cmp(&b.degree).then_with(|| {
                // smaller exponent in the last differing variable wins
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::Lex => {
                for (x, y) in a.exps.iter().zip(&b.exps) {
                    if x != y {
                        return x.cmp(y);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "grevlex" => Ok(MonomialOrder::Grevlex),
            "lex" => Ok(MonomialOrder::Lex),
            other => Err(Error::UnknownOrder(other.to_string())),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[Exponent]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_reverse_tiebreak() {
        // x^2 y vs x y^2
        assert_eq!(
            MonomialOrder::Grevlex.compare(&m(&[2, 1]), &m(&[1, 2])),
            Ordering::Greater
        );
        // degree first
        assert_eq!(MonomialOrder::Grevlex.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Less);
    }

    #[test]
    fn lex_first_variable_dominates() {
        assert_eq!(MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
    }

    #[test]
    fn reflexive() {
        let a = m(&[3, 0, 1]);
        for o in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            assert_eq!(o.compare(&a, &a), Ordering::Equal);
        }
    }

    #[test]
    fn lcm_examples() {
        // lcm(xy, yz) = xyz
        assert_eq!(m(&[1, 1, 0]).lcm(&m(&[0, 1, 1])), m(&[1, 1, 1]));
        assert_eq!(m(&[2, 1, 0]).lcm(&Monomial::one(3)), m(&[2, 1, 0]));
        // lcm(x^2 y, xz) = x^2 y z
        assert_eq!(m(&[2, 1, 0]).lcm(&m(&[1, 0, 1])), m(&[2, 1, 1]));
    }

    #[test]
    fn division() {
        assert_eq!(m(&[1, 1, 1]).checked_div(&m(&[1, 1, 0])), Some(m(&[0, 0, 1])));
        assert_eq!(m(&[1, 1, 0]).checked_div(&m(&[0, 0, 1])), None);
        assert_eq!(m(&[2, 1]).checked_div(&m(&[1, 1])), Some(m(&[1, 0])));
    }

    #[test]
    fn divisors_are_complete() {
        let t = m(&[2, 0, 1]);
        let ds = t.divisors();
        assert_eq!(ds.len(), 6);
        assert!(ds.iter().all(|d| d.divides(&t)));
    }

    #[test]
    fn degree_cache_tracks_operations() {
        let a = m(&[2, 1, 3]);
        let b = m(&[0, 4, 1]);
        for x in [&a * &b, a.lcm(&b), a.squarefree(), a.without(2)] {
            assert_eq!(x.degree(), x.exponents().iter().map(|&e| e as u32).sum::<u32>());
        }
    }
}
