use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};

/// Cyclic-n over GF(2): for `k < n` the sum of all cyclically consecutive
/// products of `k` variables, and `x1*...*xn + 1`.
pub fn gen_cyclic(n: usize) -> Result<(Ring, Vec<Polynomial>)> {
    if n < 2 {
        return Err(Error::InvalidGenerator(format!("cyclic needs n >= 2, got {n}")));
    }
    let ring = Ring::with_vars(n, MonomialOrder::Grevlex)?;
    let mut system = Vec::with_capacity(n);
    for k in 1..n {
        let terms = (0..n)
            .map(|i| (0..k).fold(0u64, |m, j| m | 1 << ((i + j) % n)))
            .map(|mask| Monomial::from_mask(n, mask))
            .collect();
        system.push(ring.poly(terms));
    }
    let all = Monomial::from_mask(n, (1u64 << n) - 1);
    system.push(ring.poly(vec![all, Monomial::one(n)]));
    Ok((ring, system))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_two_and_three() {
        let (r, s) = gen_cyclic(2).unwrap();
        assert_eq!(
            s.iter().map(|p| r.render(p)).collect::<Vec<_>>(),
            vec!["x1 + x2", "x1*x2 + 1"]
        );
        let (r, s) = gen_cyclic(3).unwrap();
        assert_eq!(
            s.iter().map(|p| r.render(p)).collect::<Vec<_>>(),
            vec!["x1 + x2 + x3", "x1*x2 + x1*x3 + x2*x3", "x1*x2*x3 + 1"]
        );
    }

    #[test]
    fn degrees() {
        for n in 2..=8 {
            let (_, s) = gen_cyclic(n).unwrap();
            assert_eq!(s.len(), n);
            for (k, p) in s.iter().enumerate() {
                assert_eq!(p.degree() as usize, k + 1);
            }
        }
    }
}
