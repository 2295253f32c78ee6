//! Exact elimination over the rationals.
//!
//! Rows are cleared of denominators and reduced with fraction-free (Bareiss)
//! elimination, so every intermediate entry is a minor of the input. Only the
//! final back substitution to reduced row echelon form divides.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{vec_ops, QMatrix};
use super::scalar::Rational;

/// Reduced row echelon form: `rows[i]` has a leading one in column `pivots[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    pub cols: usize,
    pub rows: Vec<Vec<Rational>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Columns that carry no pivot.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// Null space basis, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        self.free_columns()
            .into_iter()
            .map(|f| {
                let mut v = vec_ops::unit(self.cols, f);
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = -row[f].clone();
                }
                v
            })
            .collect()
    }

    /// Reduces `v` against the row space; zero iff `v` lies in it.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !r[p].is_zero() {
                let c = r[p].clone();
                for (x, y) in r.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x -= &c * y;
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        vec_ops::is_zero(&self.reduce(v))
    }

    /// Coordinates of `v` in the echelon row basis, if `v` is in the row space.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }
}

fn lcm_of_denominators(row: &[Rational]) -> BigInt {
    row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = lcm_of_denominators(row);
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// Fraction-free forward elimination. Returns echelon rows (integers) and
/// pivot columns.
fn bareiss_forward(mut a: Vec<Vec<BigInt>>, cols: usize) -> (Vec<Vec<BigInt>>, Vec<usize>) {
    let m = a.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, bottom) = a.split_at_mut(r + 1);
        let prow = &top[r];
        let piv = prow[c].clone();
        for row in bottom.iter_mut() {
            let f = row[c].clone();
            for j in c..cols {
                let v = &piv * &row[j] - &f * &prow[j];
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    (a, pivots)
}

/// Echelon form of the row space of `rows` (each of length `cols`).
pub fn echelon_rows(rows: &[Vec<Rational>], cols: usize) -> Echelon {
    let ints: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| !vec_ops::is_zero(r))
        .map(|r| {
            assert_eq!(r.len(), cols, "dimension mismatch");
            integer_row(r)
        })
        .collect();
    let (ech, pivots) = bareiss_forward(ints, cols);
    // back substitution to reduced form
    let mut rows: Vec<Vec<Rational>> = ech
        .into_iter()
        .zip(&pivots)
        .map(|(row, &p)| {
            let lead = row[p].clone();
            row.into_iter().map(|x| Rational::new(x, lead.clone())).collect()
        })
        .collect();
    for i in (0..rows.len()).rev() {
        let p = pivots[i];
        let (above, rest) = rows.split_at_mut(i);
        let pr = &rest[0];
        for row in above.iter_mut() {
            if !row[p].is_zero() {
                let f = row[p].clone();
                for j in p..cols {
                    if !pr[j].is_zero() {
                        row[j] -= &f * &pr[j];
                    }
                }
            }
        }
    }
    Echelon { cols, rows, pivots }
}

pub fn echelon(m: &QMatrix) -> Echelon {
    echelon_rows(&m.row_vecs(), m.cols())
}

pub fn rank(m: &QMatrix) -> usize {
    echelon(m).rank()
}

/// Basis of `{v : m v = 0}`.
pub fn kernel(m: &QMatrix) -> Vec<Vec<Rational>> {
    echelon(m).kernel()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<Rational>,
    pub kernel: Vec<Vec<Rational>>,
}

/// Solves `m x = b`. `None` means the system is inconsistent.
pub fn solve(m: &QMatrix, b: &[Rational]) -> Option<Solution> {
    assert_eq!(m.rows(), b.len(), "dimension mismatch");
    let n = m.cols();
    let aug: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| {
            let mut r = m.row(i).to_vec();
            r.push(b[i].clone());
            r
        })
        .collect();
    let e = echelon_rows(&aug, n + 1);
    if e.pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec_ops::zero(n);
    for (row, &p) in e.rows.iter().zip(&e.pivots) {
        x[p] = row[n].clone();
    }
    let core = Echelon { cols: n, rows: e.rows.iter().map(|r| r[..n].to_vec()).collect(), pivots: e.pivots.clone() };
    Some(Solution { particular: x, kernel: core.kernel() })
}

/// Determinant via fraction-free elimination.
pub fn determinant(m: &QMatrix) -> Rational {
    assert!(m.is_square());
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = m.row(i);
            let l = lcm_of_denominators(row);
            let r = row.iter().map(|x| x.numer() * (&l / x.denom())).collect();
            scale *= l;
            r
        })
        .collect();
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }

    Rational::new(a[n - 1][n - 1].clone() * sign, scale)
}

pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    assert!(m.is_square());
    let n = m.rows();
    let aug = m.hstack(&QMatrix::identity(n));
    let e = echelon(&aug);
    if e.rank() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(QMatrix::from_fn(n, n, |i, j| e.rows[i][n + j].clone()))
}

/// Solution space of a homogeneous system built up block by block.
///
/// Each block of constraint rows is applied in the coordinates of the
/// current solution basis, so the working systems stay narrow.
#[derive(Clone, Debug)]
pub struct IncrementalKernel {
    n: usize,
    basis: Option<Vec<Vec<Rational>>>,
}

impl IncrementalKernel {
    pub fn new(n: usize) -> Self {
        IncrementalKernel { n, basis: None }
    }

    pub fn dim(&self) -> usize {
        self.basis.as_ref().map_or(self.n, Vec::len)
    }

    /// Imposes `row · x = 0` for every row.
    pub fn constrain(&mut self, rows: &[Vec<Rational>]) {
        if self.dim() == 0 || rows.is_empty() {
            return;
        }
        match &self.basis {
            None => {
                let e = echelon_rows(rows, self.n);
                self.basis = Some(e.kernel());
            }
            Some(b) => {
                let reduced: Vec<Vec<Rational>> =
                    rows.iter().map(|r| b.iter().map(|v| vec_ops::dot(r, v)).collect()).collect();
                let e = echelon_rows(&reduced, b.len());
                let k = e.kernel();
                let nb = k.iter().map(|c| vec_ops::combine(c, b, self.n)).collect();
                self.basis = Some(nb);
            }
        }
    }

    pub fn basis(&self) -> Vec<Vec<Rational>> {
        match &self.basis {
            None => (0..self.n).map(|i| vec_ops::unit(self.n, i)).collect(),
            Some(b) => b.clone(),
        }
    }
}

/// Indices of standard basis vectors completing the row space of `e` to the
/// whole space.
pub fn complement_indices(e: &Echelon) -> Vec<usize> {
    e.free_columns()
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{rat, ratio};
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel(&q(&[&[1, 0], &[0, 1]])).is_empty());
        assert_eq!(kernel(&q(&[&[1, 1], &[1, 1]])), vec![vec![rat(-1), rat(1)]]);
        assert_eq!(kernel(&q(&[&[0, 1], &[0, 0]])), vec![vec![rat(1), rat(0)]]);
    }

    #[test]
    fn solve_examples() {
        let s = solve(&q(&[&[1, 0], &[0, 1]]), &[rat(3), rat(-4)]).unwrap();
        assert_eq!(s.particular, vec![rat(3), rat(-4)]);
        assert!(s.kernel.is_empty());

        let s = solve(&q(&[&[1, 1]]), &[rat(2)]).unwrap();
        assert_eq!(s.particular, vec![rat(2), rat(0)]);
        assert_eq!(s.kernel, vec![vec![rat(-1), rat(1)]]);

        assert!(solve(&q(&[&[1], &[1]]), &[rat(1), rat(2)]).is_none());
    }

    #[test]
    fn determinant_and_inverse() {
        let m = QMatrix::from_rows(vec![
            vec![ratio(1, 2), rat(3), rat(0)],
            vec![rat(2), rat(-1), ratio(1, 3)],
            vec![rat(0), rat(4), rat(5)],
        ]);
        let inv = inverse(&m).unwrap();
        assert_eq!(&m * &inv, QMatrix::identity(3));
        assert_eq!(determinant(&m) * determinant(&inv), rat(1));
        assert!(inverse(&q(&[&[1, 2], &[2, 4]])).is_none());
        assert_eq!(determinant(&q(&[&[1, 2], &[2, 4]])), rat(0));
        assert_eq!(determinant(&q(&[&[0, 1], &[1, 0]])), rat(-1));
    }

    #[test]
    fn incremental_matches_direct() {
        let a = q(&[&[1, 2, 3, 4], &[0, 1, 1, 0]]);
        let b = q(&[&[1, 0, 0, 1]]);
        let mut inc = IncrementalKernel::new(4);
        inc.constrain(&a.row_vecs());
        inc.constrain(&b.row_vecs());
        let direct = kernel(&a.vstack(&b));
        assert_eq!(inc.dim(), direct.len());
        for v in inc.basis() {
            assert!(vec_ops::is_zero(&a.vstack(&b).mul_vec(&v)));
        }
    }

    fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec((-4i64..5, 1i64..4), r * c).prop_map(move |v| {
            QMatrix::from_fn(r, c, |i, j| {
                let (n, d) = v[i * c + j];
                ratio(n, d)
            })
        })
    }

    proptest! {
        #[test]
        fn solve_reproduces_rhs(m in arb_matrix(4, 5), x in proptest::collection::vec(-5i64..6, 5)) {
            let x: Vec<Rational> = x.into_iter().map(rat).collect();
            let b = m.mul_vec(&x);
            let s = solve(&m, &b).unwrap();
            prop_assert_eq!(m.mul_vec(&s.particular), b);
            for k in &s.kernel {
                prop_assert!(vec_ops::is_zero(&m.mul_vec(k)));
            }
        }

        #[test]
        fn rank_nullity(m in arb_matrix(5, 4)) {
            let e = echelon(&m);
            prop_assert_eq!(e.rank() + e.kernel().len(), m.cols());
            // kernel vectors are independent: their echelon has full rank
            let k = e.kernel();
            prop_assert_eq!(echelon_rows(&k, m.cols()).rank(), k.len());
        }

        #[test]
        fn determinant_is_multiplicative(a in arb_matrix(3, 3), b in arb_matrix(3, 3)) {
            prop_assert_eq!(determinant(&(&a * &b)), determinant(&a) * determinant(&b));
        }
    }
}
