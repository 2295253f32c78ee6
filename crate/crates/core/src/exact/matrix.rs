use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{Rational, Scalar};

/// Ring element usable as a matrix entry.
pub trait Entry: Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> {}

impl Entry for Rational {}
impl Entry for Scalar {}

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type QMatrix = Matrix<Rational>;
pub type CMatrix = Matrix<Scalar>;

impl<T: Entry> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn diag(entries: &[T]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map<U: Entry>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn scale(&self, s: &T) -> Self
    where
        for<'a> &'a T: Mul<&'a T, Output = T>,
    {
        self.map(|x| s * x)
    }

    pub fn trace(&self) -> T {
        assert!(self.is_square());
        (0..self.rows).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T>
    where
        for<'a> &'a T: Mul<&'a T, Output = T>,
    {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// Submatrix on the given rows and columns.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }
}

impl Matrix<Scalar> {
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Self {
        self.map(Scalar::conj)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(Scalar::is_real)
    }

    pub fn real_part(&self) -> QMatrix {
        self.map(|z| z.re.clone())
    }

    pub fn from_real(m: &QMatrix) -> Self {
        m.map(|x| Scalar::real(x.clone()))
    }

    /// Real coordinates `(re, im)` of every entry, row-major, re block first.
    pub fn realified_coords(&self) -> Vec<Rational> {
        let mut out: Vec<Rational> = self.data.iter().map(|z| z.re.clone()).collect();
        out.extend(self.data.iter().map(|z| z.im.clone()));
        out
    }

    /// Real 2n×2n matrix of the complex-linear map on the realified space
    /// with basis `(e_1..e_n, i e_1..i e_n)`.
    pub fn realify(&self) -> QMatrix {
        let (r, c) = (self.rows, self.cols);
        QMatrix::from_fn(2 * r, 2 * c, |i, j| {
            let z = &self[(i % r, j % c)];
            match (i < r, j < c) {
                (true, true) | (false, false) => z.re.clone(),
                (true, false) => -z.im.clone(),
                (false, true) => z.im.clone(),
            }
        })
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<'a, T: Entry> Add<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<'a, T: Entry> Sub<&'a Matrix<T>> for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Entry> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| -x.clone())
    }
}

impl<'a, T: Entry> Mul<&'a Matrix<T>> for &'a Matrix<T>
where
    for<'b> &'b T: Mul<&'b T, Output = T>,
{
    type Output = Matrix<T>;
    fn mul(self, o: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = Matrix::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        let slot = &mut out[(i, j)];
                        *slot = std::mem::replace(slot, T::zero()) + t;
                    }
                }
            }
        }
        out
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Entry-wise helpers for rational vectors.
pub mod vec_ops {
    use super::*;

    pub fn zero(n: usize) -> Vec<Rational> {
        vec![Rational::zero(); n]
    }

    pub fn unit(n: usize, i: usize) -> Vec<Rational> {
        let mut v = zero(n);
        v[i] = Rational::one();
        v
    }

    pub fn is_zero(v: &[Rational]) -> bool {
        v.iter().all(Zero::is_zero)
    }

    pub fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn scale(a: &[Rational], s: &Rational) -> Vec<Rational> {
        a.iter().map(|x| x * s).collect()
    }

    pub fn neg(a: &[Rational]) -> Vec<Rational> {
        a.iter().map(|x| -x.clone()).collect()
    }

    /// `acc += s * a`
    pub fn axpy(acc: &mut [Rational], s: &Rational, a: &[Rational]) {
        if s.is_zero() {
            return;
        }
        for (x, y) in acc.iter_mut().zip(a) {
            if !y.is_zero() {
                *x += s * y;
            }
        }
    }

    pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
        a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
    }

    /// Linear combination `Σ c_i v_i`.
    pub fn combine(coeffs: &[Rational], vecs: &[Vec<Rational>], n: usize) -> Vec<Rational> {
        let mut out = zero(n);
        for (c, v) in coeffs.iter().zip(vecs) {
            axpy(&mut out, c, v);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;

    #[test]
    fn conj_transpose_is_involution() {
        let m = CMatrix::from_rows(vec![
            vec![Scalar::gauss(1, 2), Scalar::gauss(0, -1)],
            vec![Scalar::gauss(3, 0), Scalar::gauss(-2, 5)],
        ]);
        assert_eq!(m.conj_transpose().conj_transpose(), m);
    }

    #[test]
    fn realify_is_homomorphism() {
        let a = CMatrix::from_rows(vec![
            vec![Scalar::gauss(1, 2), Scalar::gauss(0, -1)],
            vec![Scalar::gauss(3, 0), Scalar::gauss(-2, 5)],
        ]);
        let b = CMatrix::from_rows(vec![
            vec![Scalar::gauss(0, 1), Scalar::gauss(4, 0)],
            vec![Scalar::gauss(1, 1), Scalar::gauss(0, 0)],
        ]);
        assert_eq!((&a * &b).realify(), &a.realify() * &b.realify());
    }

    #[test]
    fn product_shape() {
        let a = QMatrix::from_rows(vec![vec![rat(1), rat(2), rat(3)]]);
        let b = a.transpose();
        assert_eq!((&a * &b)[(0, 0)], rat(14));
        assert_eq!((&b * &a).rows(), 3);
    }
}
