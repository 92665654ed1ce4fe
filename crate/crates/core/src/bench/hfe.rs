//! HFE public-key systems over GF(2).
//!
//! A hidden univariate polynomial `f` over GF(2^n) whose exponents have
//! binary weight at most two is sandwiched between two random invertible
//! affine maps `S`, `T` of GF(2)^n. Every coordinate of `T(f(S(x)))` is a
//! quadratic Boolean polynomial; these are recovered by interpolation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gf2n::{Gf2n, MAX_DEGREE};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

/// Exponents `2^i` and `2^i + 2^j` (`i <= j`) that do not exceed `d`, ascending.
pub fn allowed_exponents(d: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for i in 0..63 {
        let a = 1u64 << i;
        if a > d {
            break;
        }
        out.push(a);
        for j in i..63 {
            let b = 1u64 << j;
            if a + b > d {
                break;
            }
            out.push(a + b);
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Affine map `x -> A x + b` of GF(2)^n; row `i` of `A` is a bit mask.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub rows: Vec<u64>,
    pub shift: u64,
}

impl AffineMap {
    pub fn apply(&self, x: u64) -> u64 {
        let mut y = self.shift;
        for (i, &r) in self.rows.iter().enumerate() {
            y ^= u64::from((r & x).count_ones() & 1) << i;
        }
        y
    }

    pub fn is_invertible(&self) -> bool {
        rank(&self.rows) == self.rows.len()
    }

    fn random(n: usize, rng: &mut ChaCha8Rng) -> Self {
        let mask = (1u64 << n) - 1;
        loop {
            let map = AffineMap {
                rows: (0..n).map(|_| rng.gen::<u64>() & mask).collect(),
                shift: rng.gen::<u64>() & mask,
            };
            if map.is_invertible() {
                return map;
            }
        }
    }
}

fn rank(rows: &[u64]) -> usize {
    let mut pivots: Vec<u64> = Vec::new();
    for &r in rows {
        let mut r = r;
        for &p in &pivots {
            r = r.min(r ^ p);
        }
        if r != 0 {
            pivots.push(r);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots.len()
}

/// A generated instance and everything needed to reproduce it.
#[derive(Clone, Debug)]
pub struct HfeInstance {
    pub ring: Ring,
    /// `public_k(x) + ciphertext_k`, `k = 1..n`.
    pub system: Vec<Polynomial>,
    /// Plaintext; `witness[i]` is the value of variable `i`.
    pub witness: Vec<bool>,
    pub field: Gf2n,
    /// `(exponent, coefficient)` terms of the hidden polynomial, constant first.
    pub hidden: Vec<(u64, u64)>,
    pub s: AffineMap,
    pub t: AffineMap,
}

impl HfeInstance {
    /// The public map `T(f(S(x)))` on bit vectors.
    pub fn public_map(&self, x: u64) -> u64 {
        let f = &self.field;
        let z = self.s.apply(x);
        let y = self.hidden.iter().fold(0, |acc, &(e, c)| acc ^ f.mul(c, f.pow(z, e)));
        self.t.apply(y)
    }
}

/// Seeded HFE system with hidden degree bound `d` in `n` variables.
pub fn gen_hfe(d: u64, n: usize, seed: u64) -> Result<HfeInstance> {
    if d < 2 {
        return Err(Error::InvalidGenerator(format!("degree bound {d} below 2")));
    }
    let bits = 64 - d.leading_zeros() as usize;
    if n < bits || n > MAX_DEGREE {
        return Err(Error::InvalidGenerator(format!(
            "n = {n} outside {bits}..={MAX_DEGREE} for degree bound {d}"
        )));
    }
    let field = Gf2n::new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mask = field.order() - 1;
    let mut hidden = vec![(0, rng.gen::<u64>() & mask)];
    for e in allowed_exponents(d) {
        hidden.push((e, rng.gen_range(1..field.order())));
    }
    let s = AffineMap::random(n, &mut rng);
    let t = AffineMap::random(n, &mut rng);
    let plaintext = rng.gen::<u64>() & mask;
    let mut inst = HfeInstance {
        ring: Ring::with_vars(n, MonomialOrder::Grevlex)?,
        system: Vec::new(),
        witness: (0..n).map(|i| plaintext >> i & 1 == 1).collect(),
        field,
        hidden,
        s,
        t,
    };
    let ciphertext = inst.public_map(plaintext);
    inst.system = interpolate(&inst, ciphertext);
    Ok(inst)
}

/// Coordinates of `public_map + ciphertext` as quadratic polynomials.
fn interpolate(inst: &HfeInstance, ciphertext: u64) -> Vec<Polynomial> {
    let n = inst.ring.nvars();
    let p = |x: u64| inst.public_map(x) ^ ciphertext;
    let c = p(0);
    let single: Vec<u64> = (0..n).map(|i| p(1 << i)).collect();
    let mut terms: Vec<Vec<Monomial>> = vec![Vec::new(); n];
    let mut add = |value: u64, m: &Monomial| {
        for (k, t) in terms.iter_mut().enumerate() {
            if value >> k & 1 == 1 {
                t.push(m.clone());
            }
        }
    };
    for i in 0..n {
        for j in (i + 1)..n {
            let v = p(1 << i | 1 << j) ^ single[i] ^ single[j] ^ c;
            add(v, &Monomial::from_mask(n, 1 << i | 1 << j));
        }
    }
    for (i, &s) in single.iter().enumerate() {
        add(s ^ c, &Monomial::var(n, i));
    }
    add(c, &Monomial::one(n));
    terms.into_iter().map(|t| inst.ring.poly(t)).collect()
}
