//! Independent checks of a computed basis.

use std::collections::BTreeSet;

use crate::bench::variety::brute_force_variety;
use crate::f4::Outcome;
use crate::poly::{Polynomial, Ring};
use crate::Result;

/// Buchberger's criterion: every S-polynomial of `basis` top-reduces to zero.
pub fn s_polynomials_reduce(ring: &Ring, basis: &[Polynomial]) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            let (hi, hj) = (basis[i].leading().unwrap(), basis[j].leading().unwrap());
            if hi.is_coprime(hj) {
                continue;
            }
            let s = ring.s_polynomial(&basis[i], &basis[j], false).expect("nonzero basis");
            if !ring.top_reduce(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Every polynomial of `inputs` top-reduces to zero modulo `basis`.
pub fn inputs_reduce(ring: &Ring, basis: &[Polynomial], inputs: &[Polynomial]) -> bool {
    inputs.iter().all(|p| ring.top_reduce(p, basis).is_zero())
}

/// Minimal leading terms, and no term divisible by another element's head.
pub fn is_reduced(basis: &[Polynomial]) -> bool {
    basis.iter().enumerate().all(|(i, p)| {
        basis.iter().enumerate().all(|(j, q)| {
            i == j || {
                let h = q.leading().unwrap();
                !p.terms().iter().any(|t| h.divides(t))
            }
        })
    })
}

/// GF(2) points described by a run: the fixed values together with every
/// zero of the basis in the remaining variables.
pub fn reconstruct_variety(ring: &Ring, outcome: &Outcome) -> Result<BTreeSet<u64>> {
    let fixed: u64 = outcome.assignment.iter().fold(0, |m, (v, _)| m | 1 << v);
    let values: u64 = outcome.assignment.iter().fold(0, |m, (v, a)| m | u64::from(a) << v);
    let zeros = brute_force_variety(&outcome.basis, ring)?;
    Ok(zeros.into_iter().filter(|x| x & fixed == values).collect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub s_polynomials: bool,
    pub inputs: bool,
    /// `None` when the variety was not compared.
    pub variety: Option<bool>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.s_polynomials && self.inputs && self.variety != Some(false)
    }
}

/// Checks the full basis of `outcome` against `system`; the variety is
/// compared by brute force when `with_variety` is set.
pub fn verify_outcome(ring: &Ring, system: &[Polynomial], outcome: &Outcome, with_variety: bool) -> Result<Report> {
    let basis = outcome.full_basis(ring);
    let mut report = Report {
        s_polynomials: s_polynomials_reduce(ring, &basis),
        inputs: inputs_reduce(ring, &basis, system),
        variety: None,
    };
    if with_variety {
        report.variety = Some(brute_force_variety(system, ring)? == reconstruct_variety(ring, outcome)?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MonomialOrder;

    #[test]
    fn non_basis_detected() {
        let r = Ring::new(vec!["x".into(), "y".into(), "z".into()], MonomialOrder::Grevlex).unwrap();
        let x = r.var(0);
        let y = r.var(1);
        let z = r.var(2);
        // {xy + x, yz + z + 1}: S-polynomial x is not reducible
        let f1 = r.add(&r.mul_monomial(y.leading().unwrap(), &x), &x);
        let f2 = r.add(&r.add(&r.mul_monomial(z.leading().unwrap(), &y), &z), &r.one());
        assert!(!s_polynomials_reduce(&r, &[f1.clone(), f2.clone()]));
        assert!(s_polynomials_reduce(&r, &[x.clone(), y.clone()]));
        assert!(inputs_reduce(&r, std::slice::from_ref(&x), &[f1]));
        assert!(is_reduced(&[x.clone(), y]));
        assert!(!is_reduced(&[x.clone(), r.add(&x, &z)]));
    }
}
