//! Arithmetic in GF(2^n), polynomial basis, `n <= 32`.

use crate::{Error, Result};

pub const MAX_DEGREE: usize = 32;

/// Carry-less product of two polynomials over GF(2).
fn clmul(a: u64, b: u64) -> u128 {
    let mut acc = 0u128;
    let mut b = b;
    let a = a as u128;
    while b != 0 {
        let k = b.trailing_zeros();
        acc ^= a << k;
        b &= b - 1;
    }
    acc
}

fn degree(p: u128) -> i32 {
    127 - p.leading_zeros() as i32
}

/// Remainder of `a` modulo `m` (`m != 0`).
fn poly_rem(mut a: u128, m: u128) -> u128 {
    let dm = degree(m);
    while a != 0 && degree(a) >= dm {
        a ^= m << (degree(a) - dm);
    }
    a
}

/// Irreducibility by trial division with every polynomial of degree `1..=deg/2`.
pub fn is_irreducible(p: u64) -> bool {
    let d = degree(p as u128);
    if d < 1 {
        return false;
    }
    for q in 2u64..(1u64 << (d / 2 + 1)) {
        if poly_rem(p as u128, q as u128) == 0 {
            return false;
        }
    }
    true
}

/// Lexicographically smallest irreducible polynomial of degree `n`, as a bit
/// mask with bit `n` set.
pub fn smallest_irreducible(n: usize) -> Result<u64> {
    if n == 0 || n > MAX_DEGREE {
        return Err(Error::NoIrreducible(n));
    }
    let top = 1u64 << n;
    (top..top << 1)
        .find(|&p| is_irreducible(p))
        .ok_or(Error::NoIrreducible(n))
}

/// The field GF(2)[X] / (modulus).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Gf2n {
    n: usize,
    modulus: u64,
}

impl Gf2n {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Gf2n {
            n,
            modulus: smallest_irreducible(n)?,
        })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        1 << self.n
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        poly_rem(clmul(a, b), self.modulus as u128) as u64
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e != 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse via `a^(2^n - 2)`; zero maps to zero.
    pub fn inv(&self, a: u64) -> u64 {
        self.pow(a, self.order() - 2)
    }
}
