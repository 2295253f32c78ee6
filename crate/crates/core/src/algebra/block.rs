//! Graded block matrices and superalgebras spanned by them.

use num_traits::Zero;

use super::space::{Parity, SuperSpace};
use super::structure::SuperAlgebra;
use crate::exact::linalg::{echelon_rows, inverse};
use crate::exact::{vec_ops, CMatrix, QMatrix, Rational, Scalar};
use crate::{Error, Result};

/// A homogeneous element of `gl(p|q; C)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    p: usize,
    q: usize,
    m: CMatrix,
    parity: Parity,
}

impl BlockMatrix {
    /// Checks the shape and that the blocks vanish as the parity requires.
    pub fn new(p: usize, q: usize, m: CMatrix, parity: Parity) -> Result<Self> {
        if m.rows() != p + q || m.cols() != p + q {
            return Err(Error::DimensionMismatch { expected: p + q, got: m.rows() });
        }
        for i in 0..p + q {
            for j in 0..p + q {
                let off = (i < p) != (j < p);
                let must_vanish = match parity {
                    Parity::Even => off,
                    Parity::Odd => !off,
                };
                if must_vanish && !m[(i, j)].is_zero() {
                    return Err(Error::Parity(format!("entry ({i}, {j}) violates the block parity")));
                }
            }
        }
        Ok(BlockMatrix { p, q, m, parity })
    }

    /// Parity read off from the nonzero blocks; `None` for inhomogeneous
    /// matrices. The zero matrix counts as even.
    pub fn infer(p: usize, q: usize, m: CMatrix) -> Result<Self> {
        BlockMatrix::new(p, q, m.clone(), Parity::Even).or_else(|_| BlockMatrix::new(p, q, m, Parity::Odd))
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.m
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// `str = tr A − tr D`
    pub fn supertrace(&self) -> Scalar {
        let mut s = Scalar::zero();
        for i in 0..self.p + self.q {
            if i < self.p {
                s += self.m[(i, i)].clone();
            } else {
                s -= self.m[(i, i)].clone();
            }
        }
        s
    }

    /// `[a, b] = ab − (−1)^{|a||b|} ba`
    pub fn supercommutator(&self, o: &BlockMatrix) -> BlockMatrix {
        let ab = &self.m * &o.m;
        let ba = &o.m * &self.m;
        let m = if self.parity.is_odd() && o.parity.is_odd() { &ab + &ba } else { &ab - &ba };
        BlockMatrix { p: self.p, q: self.q, m, parity: self.parity + o.parity }
    }
}

/// The matrix basis behind a superalgebra, with coordinate conversion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRealization {
    pub p: usize,
    pub q: usize,
    pub basis: Vec<BlockMatrix>,
    pivots: Vec<usize>,
    pivot_inverse: QMatrix,
}

impl MatrixRealization {
    pub(crate) fn new(p: usize, q: usize, basis: Vec<BlockMatrix>) -> Result<Self> {
        let rows: Vec<Vec<Rational>> = basis.iter().map(|b| b.m.realified_coords()).collect();
        let width = 2 * (p + q) * (p + q);
        let e = echelon_rows(&rows, width);
        if e.rank() != basis.len() {
            return Err(Error::Precondition("matrices are not linearly independent over R".into()));
        }
        let pivots = e.pivots.clone();
        let sub = QMatrix::from_fn(basis.len(), basis.len(), |i, j| rows[i][pivots[j]].clone());
        let pivot_inverse = inverse(&sub).ok_or_else(|| Error::Defect("pivot block singular".into()))?;
        Ok(MatrixRealization { p, q, basis, pivots, pivot_inverse })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `Σ x_i b_i`
    pub fn matrix_of(&self, x: &[Rational]) -> CMatrix {
        let n = self.p + self.q;
        let mut m = CMatrix::zeros(n, n);
        for (c, b) in x.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            m = &m + &b.m.scale(&Scalar::real(c.clone()));
        }
        m
    }

    /// Real coordinates of `m` in the basis, if it lies in the real span.
    pub fn coordinates(&self, m: &CMatrix) -> std::result::Result<Vec<Rational>, Vec<Rational>> {
        let w = m.realified_coords();
        let wp: Vec<Rational> = self.pivots.iter().map(|&c| w[c].clone()).collect();
        let n = self.dim();
        let x: Vec<Rational> = (0..n)
            .map(|j| (0..n).fold(Rational::zero(), |acc, i| acc + &wp[i] * &self.pivot_inverse[(i, j)]))
            .collect();
        let back = self.matrix_of(&x).realified_coords();
        let residual = vec_ops::sub(&w, &back);
        if vec_ops::is_zero(&residual) {
            Ok(x)
        } else {
            Err(residual)
        }
    }
}

/// Superalgebra structure on the real span of homogeneous block matrices,
/// with bracket the supercommutator. Even matrices are moved before odd ones
/// (stable order); labels are `names` if given.
pub fn from_matrix_span(
    name: &str,
    p: usize,
    q: usize,
    elements: Vec<(String, BlockMatrix)>,
) -> Result<(SuperAlgebra, MatrixRealization)> {
    let (mut even, odd): (Vec<_>, Vec<_>) = elements.into_iter().partition(|(_, b)| b.parity == Parity::Even);
    even.extend(odd);
    for (_, b) in &even {
        if b.p != p || b.q != q {
            return Err(Error::DimensionMismatch { expected: p + q, got: b.p + b.q });
        }
    }
    let labels: Vec<String> = even.iter().map(|(l, _)| l.clone()).collect();
    let parities: Vec<Parity> = even.iter().map(|(_, b)| b.parity).collect();
    let basis: Vec<BlockMatrix> = even.into_iter().map(|(_, b)| b).collect();
    let space = SuperSpace::new(labels, parities)?;
    let real = MatrixRealization::new(p, q, basis)?;
    let n = real.dim();
    let mut brackets = Vec::new();
    for j in 0..n {
        for i in 0..=j {
            let c = real.basis[i].supercommutator(&real.basis[j]);
            match real.coordinates(&c.m) {
                Ok(x) => brackets.push(((i, j), x)),
                Err(residual) => return Err(Error::NotClosed { pair: (i, j), residual }),
            }
        }
    }
    let g = SuperAlgebra::from_brackets(name, space, brackets)?;
    Ok((g, real))
}

/// Elementary matrix `E_{ij}` scaled by `s`.
pub fn unit_matrix(n: usize, i: usize, j: usize, s: Scalar) -> CMatrix {
    let mut m = CMatrix::zeros(n, n);
    m[(i, j)] = s;
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn u11() -> (SuperAlgebra, MatrixRealization) {
        let i = Scalar::i();
        let one = Scalar::from_int(1);
        let e = |r, c, s: Scalar| unit_matrix(2, r, c, s);
        let elems = vec![
            ("a".to_string(), BlockMatrix::new(1, 1, e(0, 0, i.clone()), Parity::Even).unwrap()),
            ("d".to_string(), BlockMatrix::new(1, 1, e(1, 1, i.clone()), Parity::Even).unwrap()),
            (
                "x".to_string(),
                BlockMatrix::new(1, 1, &e(0, 1, one.clone()) + &e(1, 0, i.clone()), Parity::Odd).unwrap(),
            ),
            ("y".to_string(), BlockMatrix::new(1, 1, &e(0, 1, i.clone()) + &e(1, 0, one), Parity::Odd).unwrap()),
        ];
        from_matrix_span("u(1|1)", 1, 1, elems).unwrap()
    }

    #[test]
    fn u11_square_identity() {
        let (g, real) = u11();
        g.verify().unwrap();
        let x = g.unit(2);
        let xx = g.bracket(&x, &x).unwrap();
        // [X, X] = 2X² = 2i·1
        let expect = CMatrix::identity(2).scale(&Scalar::gauss(0, 2));
        assert_eq!(real.matrix_of(&xx), expect);
        assert_eq!(xx, vec![rat(2), rat(2), rat(0), rat(0)]);
    }

    #[test]
    fn mistagged_parity_is_rejected() {
        let m = unit_matrix(2, 0, 0, Scalar::i());
        assert!(BlockMatrix::new(1, 1, m, Parity::Odd).is_err());
    }
}
