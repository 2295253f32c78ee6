//! The odd part as a module over the even part: action matrices and
//! commutants.

use num_traits::Zero;

use super::structure::SuperAlgebra;
use super::subspace::Subspace;
use crate::algebra::combinators::CoordinateBasis;
use crate::exact::sparse::SparseRref;
use crate::exact::{QMatrix, Rational};
use crate::Result;

/// Matrices of `ad x` for `x` in `acting`, restricted to the invariant
/// subspace `m`, in the coordinates of `basis` (a basis of `m`).
pub fn restricted_action(g: &SuperAlgebra, acting: &[Vec<Rational>], basis: &CoordinateBasis) -> Result<Vec<QMatrix>> {
    let k = basis.len();
    acting
        .iter()
        .map(|x| {
            let cols = basis
                .vectors
                .iter()
                .enumerate()
                .map(|(j, v)| {
                    let w = g.bracket_unchecked(x, v);
                    basis
                        .coordinates(&w)
                        .ok_or(crate::Error::Precondition(format!("subspace is not invariant (basis vector {j})")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(QMatrix::from_cols(k, &cols))
        })
        .collect()
}

/// Action of the even basis vectors on `g₁` in the standard odd basis.
pub fn odd_action(g: &SuperAlgebra) -> Vec<QMatrix> {
    let d0 = g.d0();
    let d1 = g.d1();
    (0..d0)
        .map(|x| {
            let mut a = QMatrix::zeros(d1, d1);
            for j in 0..d1 {
                g.for_each_term(x, d0 + j, |k, c| a[(k - d0, j)] += c);
            }
            a
        })
        .collect()
}

/// Basis of `{M : M A = A M for every A in actions}` on `K^d`.
pub fn commutant(actions: &[QMatrix], d: usize) -> Vec<QMatrix> {
    let idx = |r: usize, c: usize| r * d + c;
    let mut rref = SparseRref::new(d * d);
    for a in actions {
        let by_col: Vec<Vec<(usize, &Rational)>> =
            (0..d).map(|c| (0..d).filter(|&k| !a[(k, c)].is_zero()).map(|k| (k, &a[(k, c)])).collect()).collect();
        let by_row: Vec<Vec<(usize, &Rational)>> =
            (0..d).map(|r| (0..d).filter(|&k| !a[(r, k)].is_zero()).map(|k| (k, &a[(r, k)])).collect()).collect();
        // (MA − AM)_{rc} = Σ_k M_{rk} A_{kc} − Σ_k A_{rk} M_{kc}
        for r in 0..d {
            for c in 0..d {
                let left = by_col[c].iter().map(|&(k, x)| (idx(r, k), x.clone()));
                let right = by_row[r].iter().map(|&(k, x)| (idx(k, c), -x.clone()));
                rref.add_row(left.chain(right));
            }
        }
    }
    rref.kernel().into_iter().map(|v| QMatrix::from_fn(d, d, |r, c| v[idx(r, c)].clone())).collect()
}

/// Dimension of the commutant of the even part acting on the odd part.
pub fn odd_commutant_dim(g: &SuperAlgebra) -> usize {
    commutant(&odd_action(g), g.d1()).len()
}

/// Smallest subspace containing `v` and invariant under the `actions`
/// (given on the ambient space).
pub fn spin_up(actions: &[QMatrix], seeds: &[Vec<Rational>]) -> Subspace {
    let d = actions.first().map_or_else(|| seeds.first().map_or(0, Vec::len), |a| a.rows());
    let mut s = Subspace::span(d, seeds);
    let mut frontier: Vec<Vec<Rational>> = s.basis().to_vec();
    while let Some(v) = frontier.pop() {
        for a in actions {
            let w = a.mul_vec(&v);
            if !s.contains(&w) {
                s = s.sum(&Subspace::span(d, std::slice::from_ref(&w)));
                frontier.push(w);
            }
        }
    }
    s
}
