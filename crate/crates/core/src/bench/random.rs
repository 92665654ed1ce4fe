//! Seeded random quadratic systems for tests and examples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

/// Random nonzero quadratic: every squarefree monomial of degree at most two
/// appears with probability 1/2.
pub fn random_quadratic(n: usize, rng: &mut impl Rng) -> Vec<Monomial> {
    loop {
        let mut terms = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if rng.gen() {
                    terms.push(Monomial::from_mask(n, 1 << i | 1 << j));
                }
            }
            if rng.gen() {
                terms.push(Monomial::var(n, i));
            }
        }
        if rng.gen() {
            terms.push(Monomial::one(n));
        }
        if terms.iter().any(|t| t.degree() > 0) {
            return terms;
        }
    }
}

/// `m` random quadratics in `n` variables. With `planted`, constants are
/// adjusted so that a random point is a solution, which is returned.
pub fn random_system(
    n: usize,
    m: usize,
    planted: bool,
    seed: u64,
) -> Result<(Ring, Vec<Polynomial>, Option<Vec<bool>>)> {
    if n == 0 || n > 63 || m == 0 {
        return Err(Error::InvalidGenerator(format!("random system with n = {n}, m = {m}")));
    }
    let ring = Ring::with_vars(n, MonomialOrder::Grevlex)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let mut system = Vec::with_capacity(m);
    for _ in 0..m {
        let mut p = ring.poly(random_quadratic(n, &mut rng));
        if planted && p.evaluate_at(&point) {
            p = ring.add(&p, &ring.one());
        }
        system.push(p);
    }
    Ok((ring, system, planted.then_some(point)))
}
