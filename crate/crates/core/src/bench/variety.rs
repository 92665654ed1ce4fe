use std::collections::BTreeSet;

use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};

/// Largest number of variables `brute_force_variety` enumerates.
pub const MAX_BRUTE_FORCE_VARS: usize = 24;

/// Every point of {0,1}^n where all of `system` vanishes. Point bit `i` is
/// the value of variable `i`.
pub fn brute_force_variety(system: &[Polynomial], ring: &Ring) -> Result<BTreeSet<u64>> {
    let n = ring.nvars();
    if n > MAX_BRUTE_FORCE_VARS {
        return Err(Error::TooManyVariables {
            n,
            max: MAX_BRUTE_FORCE_VARS,
        });
    }
    let total = 1u64 << n;
    let threads = if n >= 16 {
        std::thread::available_parallelism().map_or(1, |k| k.get()).min(16) as u64
    } else {
        1
    };
    let chunk = total.div_ceil(threads);
    // over GF(2) points only the support of a monomial matters
    let masks: Vec<Vec<u64>> = system
        .iter()
        .map(|p| p.terms().iter().map(|t| t.support_mask()).collect())
        .collect();
    let masks = &masks;
    let scan = move |lo: u64, hi: u64| -> Vec<u64> {
        (lo..hi)
            .filter(|&x| masks.iter().all(|p| p.iter().filter(|&&m| x & m == m).count() % 2 == 0))
            .collect()
    };
    if threads == 1 {
        return Ok(scan(0, total).into_iter().collect());
    }
    let parts: Vec<Vec<u64>> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                let lo = t * chunk;
                let hi = ((t + 1) * chunk).min(total);
                s.spawn(move || scan(lo, hi))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    Ok(parts.into_iter().flatten().collect())
}

/// `point` as a list of booleans, variable 0 first.
pub fn point_bits(point: u64, n: usize) -> Vec<bool> {
    (0..n).map(|i| point >> i & 1 == 1).collect()
}
