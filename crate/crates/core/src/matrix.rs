//! Macaulay matrices over GF(2) with dense bit rows.

use rustc_hash::FxHashMap;

use crate::poly::{Monomial, Polynomial, Ring};

/// Dense GF(2) row; column `c` lives in bit `c % 64` of word `c / 64`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(ncols: usize) -> Self {
        BitRow {
            words: vec![0; ncols.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut r = Self::zeros(bits.len());
        for (c, &b) in bits.iter().enumerate() {
            if b {
                r.set(c);
            }
        }
        r
    }

    #[inline]
    pub fn get(&self, c: usize) -> bool {
        self.words[c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, c: usize) {
        self.words[c / 64] |= 1 << (c % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the first set column.
    pub fn leading(&self) -> Option<usize> {
        self.leading_from(0)
    }

    fn leading_from(&self, word: usize) -> Option<usize> {
        self.words[word..]
            .iter()
            .position(|&w| w != 0)
            .map(|k| (word + k) * 64 + self.words[word + k].trailing_zeros() as usize)
    }

    /// `self ^= other` on words `from..`.
    #[inline]
    fn xor_from(&mut self, other: &BitRow, from: usize) {
        for (a, b) in self.words[from..].iter_mut().zip(&other.words[from..]) {
            *a ^= b;
        }
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
}

/// Where a matrix row came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// `u * f` taken from a critical pair.
    PairProduct,
    /// A whole S-polynomial row.
    SPolynomial,
    /// A reducer appended by symbolic preprocessing.
    Reducer,
    /// Output of row reduction.
    Echelon,
}

/// Rows of GF(2) coefficients over a descending monomial column index.
#[derive(Clone, Debug)]
pub struct MacaulayMatrix {
    pub columns: Vec<Monomial>,
    pub rows: Vec<BitRow>,
    pub kinds: Vec<RowKind>,
}

impl MacaulayMatrix {
    /// Column set = union of the row monomials, sorted descending.
    pub fn from_polys<'a>(ring: &Ring, rows: impl IntoIterator<Item = (&'a Polynomial, RowKind)>) -> Self {
        let rows: Vec<(&Polynomial, RowKind)> = rows.into_iter().collect();
        let mut index: FxHashMap<&Monomial, usize> = FxHashMap::default();
        let mut columns: Vec<Monomial> = Vec::new();
        for (p, _) in &rows {
            for t in p.terms() {
                index.entry(t).or_insert_with(|| {
                    columns.push(t.clone());
                    0
                });
            }
        }
        columns.sort_unstable_by(|a, b| ring.compare(b, a));
        let index: FxHashMap<&Monomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut bits = Vec::with_capacity(rows.len());
        let mut kinds = Vec::with_capacity(rows.len());
        for (p, kind) in rows {
            let mut r = BitRow::zeros(columns.len());
            for t in p.terms() {
                r.set(index[t]);
            }
            bits.push(r);
            kinds.push(kind);
        }
        MacaulayMatrix {
            columns,
            rows: bits,
            kinds,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn row_poly(&self, r: usize) -> Polynomial {
        Polynomial::from_sorted_unchecked(self.rows[r].ones().map(|c| self.columns[c].clone()).collect())
    }

    pub fn to_polys(&self) -> Vec<Polynomial> {
        (0..self.nrows()).map(|r| self.row_poly(r)).collect()
    }

    /// Reduced row echelon form: leftmost 1 of each row is its pivot, pivot
    /// columns are cleared in every other row, zero rows are dropped and the
    /// rows come out sorted by pivot column.
    pub fn row_echelon(&self) -> MacaulayMatrix {
        let rows = rref(self.rows.clone(), self.ncols());
        MacaulayMatrix {
            columns: self.columns.clone(),
            kinds: vec![RowKind::Echelon; rows.len()],
            rows,
        }
    }
}

/// Gauss–Jordan elimination over GF(2).
pub fn rref(rows: Vec<BitRow>, ncols: usize) -> Vec<BitRow> {
    let mut pivot_of: Vec<Option<usize>> = vec![None; ncols];
    let mut basis: Vec<BitRow> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();

    for mut row in rows {
        // clear every pivot column, scanning left to right; XOR only
        // touches words at or after the current one
        let mut w = 0;
        let nwords = row.words.len();
        while w < nwords {
            let mut word = row.words[w];
            while word != 0 {
                let b = word.trailing_zeros() as usize;
                let c = w * 64 + b;
                if let Some(p) = pivot_of[c] {
                    row.xor_from(&basis[p], w);
                    word = row.words[w] & (!0u64).checked_shl(b as u32 + 1).unwrap_or(0);
                } else {
                    word &= word - 1;
                }
            }
            w += 1;
        }
        if let Some(c) = row.leading() {
            pivot_of[c] = Some(basis.len());
            pivots.push(c);
            basis.push(row);
        }
    }

    // back substitution, rightmost pivot first so each pivot row used is final
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_unstable_by_key(|&i| std::cmp::Reverse(pivots[i]));
    for &i in &order {
        let c0 = pivots[i];
        let mut row = std::mem::replace(&mut basis[i], BitRow { words: Vec::new() });
        let start = c0 + 1;
        if start < ncols {
            let mut w = start / 64;
            let mut word = row.words[w] & (!0u64).checked_shl((start % 64) as u32).unwrap_or(0);
            loop {
                while word != 0 {
                    let b = word.trailing_zeros() as usize;
                    let c = w * 64 + b;
                    if let Some(p) = pivot_of[c] {
                        row.xor_from(&basis[p], w);
                        word = row.words[w] & (!0u64).checked_shl(b as u32 + 1).unwrap_or(0);
                    } else {
                        word &= word - 1;
                    }
                }
                w += 1;
                if w >= row.words.len() {
                    break;
                }
                word = row.words[w];
            }
        }
        basis[i] = row;
    }

    order.reverse();
    let mut out: Vec<Option<BitRow>> = basis.into_iter().map(Some).collect();
    order.into_iter().map(|i| out[i].take().unwrap()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(bits: &[&str]) -> Vec<BitRow> {
        bits.iter()
            .map(|s| BitRow::from_bools(&s.chars().map(|c| c == '1').collect::<Vec<_>>()))
            .collect()
    }

    #[test]
    fn identity_unchanged() {
        let id = rows(&["100", "010", "001"]);
        assert_eq!(rref(id.clone(), 3), id);
    }

    #[test]
    fn dependent_row_removed() {
        let out = rref(rows(&["110", "011", "101"]), 3);
        assert_eq!(out, rows(&["101", "011"]));
    }

    #[test]
    fn single_row_unchanged() {
        let r = rows(&["0110"]);
        assert_eq!(rref(r.clone(), 4), r);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let n = 150;
        let mut a = vec![false; n];
        let mut b = vec![false; n];
        a[3] = true;
        a[140] = true;
        b[140] = true;
        b[70] = true;
        let out = rref(vec![BitRow::from_bools(&a), BitRow::from_bools(&b)], n);
        assert_eq!(out.len(), 2);
        assert_eq!(out[0].ones().collect::<Vec<_>>(), vec![3, 140]);
        assert_eq!(out[1].ones().collect::<Vec<_>>(), vec![70, 140]);
        let mut c = vec![false; n];
        c[3] = true;
        let out = rref(
            vec![BitRow::from_bools(&a), BitRow::from_bools(&b), BitRow::from_bools(&c)],
            n,
        );
        assert_eq!(out.len(), 3);
        assert_eq!(out[0].ones().collect::<Vec<_>>(), vec![3]);
        assert_eq!(out[1].ones().collect::<Vec<_>>(), vec![70]);
        assert_eq!(out[2].ones().collect::<Vec<_>>(), vec![140]);
    }
}
