//! Exact positive-definiteness certification.

use num_traits::{One, Signed, Zero};

use super::linalg::solve;
use super::matrix::{vec_ops, QMatrix};
use super::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definiteness {
    /// All leading principal minors, in order, each strictly positive.
    Positive { minors: Vec<Rational> },
    /// `witness·g·witness ≤ 0` with `witness ≠ 0`.
    NotPositive { witness: Vec<Rational>, value: Rational },
}

impl Definiteness {
    pub fn is_positive(&self) -> bool {
        matches!(self, Definiteness::Positive { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("matrix is not symmetric")]
pub struct NotSymmetric;

pub fn quadratic_form(g: &QMatrix, v: &[Rational]) -> Rational {
    vec_ops::dot(v, &g.mul_vec(v))
}

/// Sylvester's criterion by symmetric elimination. The pivots are ratios of
/// consecutive leading minors; the first non-positive pivot yields a vector
/// whose value equals that pivot.
pub fn is_positive_definite(g: &QMatrix) -> Result<Definiteness, NotSymmetric> {
    if !g.is_square() || !g.is_symmetric() {
        return Err(NotSymmetric);
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut minors = Vec::with_capacity(n);
    let mut minor = Rational::one();
    for k in 0..n {
        let d = a[(k, k)].clone();
        if !d.is_positive() {
            let witness = schur_vector(g, k);
            let value = quadratic_form(g, &witness);
            debug_assert_eq!(value, d);
            return Ok(Definiteness::NotPositive { witness, value });
        }
        minor *= &d;
        minors.push(minor.clone());
        for i in k + 1..n {
            if a[(i, k)].is_zero() {
                continue;
            }
            let f = &a[(i, k)] / &d;
            for j in k..n {
                let v = &f * &a[(k, j)];
                if !v.is_zero() {
                    a[(i, j)] -= v;
                }
            }
        }
    }
    Ok(Definiteness::Positive { minors })
}

/// `v = (−G₁₁⁻¹ g₁ₖ, 1, 0, …)` so that `vᵀGv` is the `k`-th Schur pivot.
fn schur_vector(g: &QMatrix, k: usize) -> Vec<Rational> {
    let n = g.rows();
    let idx: Vec<usize> = (0..k).collect();
    let mut v = vec_ops::unit(n, k);
    if k > 0 {
        let block = g.select(&idx, &idx);
        let rhs: Vec<Rational> = (0..k).map(|i| -g[(i, k)].clone()).collect();
        let s = solve(&block, &rhs).expect("leading block is positive definite");
        v[..k].clone_from_slice(&s.particular);
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::rat;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn examples() {
        let r = is_positive_definite(&q(&[&[2, 1], &[1, 1]])).unwrap();
        assert_eq!(r, Definiteness::Positive { minors: vec![rat(2), rat(1)] });

        match is_positive_definite(&q(&[&[1, 2], &[2, 1]])).unwrap() {
            Definiteness::NotPositive { witness, value } => {
                assert_eq!(witness, vec![rat(-2), rat(1)]);
                assert_eq!(value, rat(-3));
            }
            other => panic!("{other:?}"),
        }
        // the vector (1, -1) also refutes it
        assert_eq!(quadratic_form(&q(&[&[1, 2], &[2, 1]]), &[rat(1), rat(-1)]), rat(-2));

        match is_positive_definite(&q(&[&[0]])).unwrap() {
            Definiteness::NotPositive { witness, value } => {
                assert_eq!(witness, vec![rat(1)]);
                assert_eq!(value, rat(0));
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(is_positive_definite(&q(&[&[1, 2], &[0, 1]])), Err(NotSymmetric));
    }

    fn arb_symmetric(n: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec(-4i64..5, n * n).prop_map(move |v| {
            let m = QMatrix::from_fn(n, n, |i, j| rat(v[i * n + j]));
            // mᵀm + small perturbation keeps a healthy share of positive cases
            let s = &m.transpose() * &m;
            QMatrix::from_fn(n, n, |i, j| s[(i, j)].clone() - if i == j { rat(2) } else { rat(0) })
        })
    }

    proptest! {
        #[test]
        fn samples_never_refute_positive(g in arb_symmetric(3), vs in proptest::collection::vec(proptest::collection::vec(-6i64..7, 3), 30)) {
            match is_positive_definite(&g).unwrap() {
                Definiteness::Positive { .. } => {
                    for v in vs {
                        let v: Vec<Rational> = v.into_iter().map(rat).collect();
                        if !vec_ops::is_zero(&v) {
                            prop_assert!(quadratic_form(&g, &v).is_positive());
                        }
                    }
                }
                Definiteness::NotPositive { witness, value } => {
                    prop_assert!(!vec_ops::is_zero(&witness));
                    prop_assert!(!value.is_positive());
                    prop_assert_eq!(quadratic_form(&g, &witness), value);
                }
            }
        }
    }
}
