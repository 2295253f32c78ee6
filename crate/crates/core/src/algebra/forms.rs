//! Symmetric bilinear forms on `g₀` or `g₁` invariant under the even part.

use num_traits::Zero;

use super::space::Parity;
use super::structure::SuperAlgebra;
use crate::exact::linalg::IncrementalKernel;
use crate::exact::{QMatrix, Rational};
use crate::{Error, Result};

/// A symmetric form on the span of the basis vectors of one parity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantForm {
    pub parity: Parity,
    pub gram: QMatrix,
}

impl InvariantForm {
    pub fn new(g: &SuperAlgebra, parity: Parity, gram: QMatrix) -> Result<Self> {
        check_invariant_form(g, parity, &gram)?;
        Ok(InvariantForm { parity, gram })
    }
}

/// Matrix of `ad e_x` restricted to the basis vectors of parity `p`.
fn restricted_ad(g: &SuperAlgebra, x: usize, p: Parity) -> QMatrix {
    let r = g.space().indices_of(p);
    let off = r.start;
    let d = r.len();
    let mut a = QMatrix::zeros(d, d);
    for j in r.clone() {
        g.for_each_term(x, j, |k, c| {
            if g.parity(k) == p {
                a[(k - off, j - off)] += c;
            }
        });
    }
    a
}

/// Checks symmetry and `B([x,a],b) + B(a,[x,b]) = 0` for even basis `x`.
pub fn check_invariant_form(g: &SuperAlgebra, p: Parity, gram: &QMatrix) -> Result<()> {
    let d = g.space().indices_of(p).len();
    if gram.rows() != d || gram.cols() != d {
        return Err(Error::DimensionMismatch { expected: d, got: gram.rows() });
    }
    if !gram.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    for x in g.space().even_indices() {
        let a = restricted_ad(g, x, p);
        let s = &(&a.transpose() * gram) + &(gram * &a);
        if let Some(idx) = s.entries().iter().position(|c| !c.is_zero()) {
            let off = g.space().indices_of(p).start;
            return Err(Error::NotInvariant(x, off + idx / d, off + idx % d));
        }
    }
    Ok(())
}

/// Index of the unknown for the symmetric entry `(a, b)`.
fn sym_index(d: usize, a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    a * d - a * (a + 1) / 2 + b
}

/// Basis of the space of invariant symmetric forms on the part of parity `p`.
pub fn invariant_forms(g: &SuperAlgebra, p: Parity) -> Vec<QMatrix> {
    let d = g.space().indices_of(p).len();
    let unknowns = d * (d + 1) / 2;
    let mut inc = IncrementalKernel::new(unknowns);
    for x in g.space().even_indices() {
        let a = restricted_ad(g, x, p);
        if a.is_zero() {
            continue;
        }
        // (AᵀB + BA)_{ab} = Σ_k A_{ka} B_{kb} + Σ_k B_{ak} A_{kb}
        let mut rows = Vec::new();
        for i in 0..d {
            for j in i..d {
                let mut row = vec![Rational::zero(); unknowns];
                for k in 0..d {
                    if !a[(k, i)].is_zero() {
                        row[sym_index(d, k, j)] += &a[(k, i)];
                    }
                    if !a[(k, j)].is_zero() {
                        row[sym_index(d, i, k)] += &a[(k, j)];
                    }
                }
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
        inc.constrain(&rows);
        if inc.dim() == 0 {
            break;
        }
    }
    inc.basis().into_iter().map(|v| QMatrix::from_fn(d, d, |i, j| v[sym_index(d, i, j)].clone())).collect()
}

/// Killing form restricted to one parity part.
pub fn killing_restricted(g: &SuperAlgebra, p: Parity) -> QMatrix {
    let k = g.killing_form();
    let r: Vec<usize> = g.space().indices_of(p).collect();
    k.select(&r, &r)
}
