//! Sparse homogeneous systems kept in reduced row echelon form.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::scalar::Rational;

type Row = BTreeMap<usize, Rational>;

/// Reduced row echelon form built one sparse row at a time.
#[derive(Clone, Debug, Default)]
pub struct SparseRref {
    n: usize,
    rows: BTreeMap<usize, Row>,
}

impl SparseRref {
    pub fn new(n: usize) -> Self {
        SparseRref { n, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn nullity(&self) -> usize {
        self.n - self.rank()
    }

    /// Adds `Σ c_j x_j = 0`; returns whether the rank grew.
    pub fn add_row(&mut self, entries: impl IntoIterator<Item = (usize, Rational)>) -> bool {
        let mut row: Row = BTreeMap::new();
        for (j, c) in entries {
            if !c.is_zero() {
                let e = row.entry(j).or_insert_with(Rational::zero);
                *e += c;
                if e.is_zero() {
                    row.remove(&j);
                }
            }
        }
        let hits: Vec<usize> = row.keys().filter(|j| self.rows.contains_key(j)).copied().collect();
        for p in hits {
            let Some(f) = row.get(&p).cloned() else { continue };
            for (j, c) in &self.rows[&p] {
                let e = row.entry(*j).or_insert_with(Rational::zero);
                *e -= &f * c;
                if e.is_zero() {
                    row.remove(j);
                }
            }
        }
        let Some((&p, lead)) = row.iter().next() else { return false };
        let inv = Rational::one() / lead;
        for c in row.values_mut() {
            *c *= &inv;
        }
        for other in self.rows.values_mut() {
            if let Some(f) = other.get(&p).cloned() {
                for (j, c) in &row {
                    let e = other.entry(*j).or_insert_with(Rational::zero);
                    *e -= &f * c;
                    if e.is_zero() {
                        other.remove(j);
                    }
                }
            }
        }
        self.rows.insert(p, row);
        true
    }

    /// Kernel basis: one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        (0..self.n)
            .filter(|j| !self.rows.contains_key(j))
            .map(|f| {
                let mut v = vec![Rational::zero(); self.n];
                v[f] = Rational::one();
                for (p, row) in &self.rows {
                    if let Some(c) = row.get(&f) {
                        v[*p] = -c.clone();
                    }
                }
                v
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::kernel;
    use crate::exact::scalar::rat;
    use crate::exact::QMatrix;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn matches_dense_kernel(rows in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 6), 0..8)) {
            let mut s = SparseRref::new(6);
            for r in &rows {
                s.add_row(r.iter().enumerate().map(|(j, &c)| (j, rat(c))));
            }
            let k = s.kernel();
            for v in &k {
                for r in &rows {
                    let dot: Rational = r.iter().zip(v).map(|(&a, b)| rat(a) * b).sum();
                    prop_assert!(dot.is_zero());
                }
            }
            let m = if rows.is_empty() {
                QMatrix::zeros(0, 6)
            } else {
                QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&c| rat(c)).collect()).collect())
            };
            prop_assert_eq!(k.len(), kernel(&m).len());
        }
    }
}
