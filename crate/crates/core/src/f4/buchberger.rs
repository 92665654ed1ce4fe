//! Textbook Buchberger algorithm, kept as an independent oracle.
//!
//! Shares only polynomial arithmetic with the F4 code: no matrices, no pair
//! engine, no history.

use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};

/// Reduced Gröbner basis of `system`, ascending by leading term.
///
/// Pairs are taken smallest lcm first; only the coprime criterion is used.
pub fn buchberger_reference(ring: &Ring, system: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut g: Vec<Polynomial> = system.iter().filter(|p| !p.is_zero()).cloned().collect();
    if g.is_empty() {
        return Err(Error::EmptySystem);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        let k = (0..pairs.len())
            .min_by(|&a, &b| {
                let la = lcm_of(&g, pairs[a]);
                let lb = lcm_of(&g, pairs[b]);
                ring.compare(&la, &lb).then(a.cmp(&b))
            })
            .unwrap();
        let (i, j) = pairs.remove(k);
        let (hi, hj) = (g[i].leading().unwrap(), g[j].leading().unwrap());
        if hi.is_coprime(hj) {
            continue;
        }
        let s = ring.s_polynomial(&g[i], &g[j], false)?;
        let r = ring.reduce_full(&s, &g);
        if r.is_zero() {
            continue;
        }
        if r.is_one() {
            return Ok(vec![ring.one()]);
        }
        let n = g.len();
        g.push(r);
        pairs.extend((0..n).map(|i| (i, n)));
    }
    Ok(reduce_basis(ring, g))
}

fn lcm_of(g: &[Polynomial], (i, j): (usize, usize)) -> crate::poly::Monomial {
    g[i].leading().unwrap().lcm(g[j].leading().unwrap())
}

/// Minimal basis by leading-term divisibility, then each element fully
/// reduced by the others.
fn reduce_basis(ring: &Ring, mut g: Vec<Polynomial>) -> Vec<Polynomial> {
    g.sort_by(|a, b| ring.compare(a.leading().unwrap(), b.leading().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for p in g {
        if !minimal
            .iter()
            .any(|q| q.leading().unwrap().divides(p.leading().unwrap()))
        {
            minimal.push(p);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, q)| q.clone())
            .collect();
        let head = minimal[i].leading().unwrap().clone();
        let tail = Polynomial::from_sorted_unchecked(minimal[i].terms()[1..].to_vec());
        let reduced_tail = ring.reduce_full(&tail, &others);
        let p = ring.add(&Polynomial::from_monomial(head), &reduced_tail);
        out.push(p);
    }
    out.sort_by(|a, b| ring.compare(a.leading().unwrap(), b.leading().unwrap()));
    out
}
