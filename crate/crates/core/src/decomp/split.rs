//! Splitting a semisimple module into simple summands with the commutant:
//! coprime factors of characteristic polynomials, zero divisors with an
//! invariant complement, and spin-up of single vectors.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::module::{commutant, spin_up};
use crate::algebra::CoordinateBasis;
use crate::exact::linalg::{kernel, solve};
use crate::exact::{char_poly_and_rational_split, rat, vec_ops, QMatrix, Rational};
use crate::{Error, Result};

/// Trials per module before giving up on finding a zero divisor.
pub const SPLIT_TRIAL_CAP: usize = 64;
const SPIN_UP_VECTORS: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Simplicity {
    /// The commutant is the scalars.
    Scalar,
    /// The commutant is a field `Q[θ]` with the given irreducible quadratic
    /// minimal polynomial (coefficients from the constant term up).
    Field { min_poly: Vec<String> },
    /// No zero divisor found in the commutant within the trial cap and every
    /// spin-up generated the whole module; simplicity is not proven.
    Unproven { trials: usize },
}

impl Simplicity {
    pub fn is_certified(&self) -> bool {
        !matches!(self, Simplicity::Unproven { .. })
    }
}

/// A simple summand in the coordinates of the split module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleSummand {
    pub basis: Vec<Vec<Rational>>,
    pub commutant_dim: usize,
    pub certificate: Simplicity,
}

/// Matrices of the actions on an invariant subspace, in its basis.
pub fn restrict(actions: &[QMatrix], basis: &[Vec<Rational>]) -> Result<Vec<QMatrix>> {
    let d = basis.first().map_or(0, Vec::len);
    let cb = CoordinateBasis::new(d, basis.to_vec())?;
    actions
        .iter()
        .map(|a| {
            let cols = basis
                .iter()
                .map(|v| cb.coordinates(&a.mul_vec(v)).ok_or(Error::Precondition("subspace is not invariant".into())))
                .collect::<Result<Vec<_>>>()?;
            Ok(QMatrix::from_cols(basis.len(), &cols))
        })
        .collect()
}

enum Step {
    Split(Vec<Vec<Vec<Rational>>>),
    Simple(usize, Simplicity),
}

fn combine_matrices(coeffs: &[Rational], ms: &[QMatrix], d: usize) -> QMatrix {
    coeffs.iter().zip(ms).fold(QMatrix::zeros(d, d), |acc, (c, m)| if c.is_zero() { acc } else { &acc + &m.scale(c) })
}

/// An invariant complement of the submodule `u`, found as `ker π` for a
/// projection `π` onto `u` inside the commutant.
fn complement(u: &[Vec<Rational>], comm: &[QMatrix], d: usize) -> Result<Vec<Vec<Rational>>> {
    let ann = kernel(&QMatrix::from_rows(u.to_vec()));
    let e = comm.len();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for v in u {
        let images: Vec<Vec<Rational>> = comm.iter().map(|m| m.mul_vec(v)).collect();
        for r in 0..d {
            rows.push((0..e).map(|i| images[i][r].clone()).collect::<Vec<_>>());
            rhs.push(v[r].clone());
        }
    }
    for j in 0..d {
        let images: Vec<Vec<Rational>> = comm.iter().map(|m| m.col(j)).collect();
        for y in &ann {
            rows.push((0..e).map(|i| vec_ops::dot(y, &images[i])).collect());
            rhs.push(Rational::zero());
        }
    }
    let sol = solve(&QMatrix::from_rows(rows), &rhs)
        .ok_or_else(|| Error::Precondition("submodule has no invariant complement (module not semisimple)".into()))?;
    let pi = combine_matrices(&sol.particular, comm, d);
    Ok(kernel(&pi))
}

fn analyze(acts: &[QMatrix], d: usize, rng: &mut ChaCha8Rng) -> Result<Step> {
    if d <= 1 {
        return Ok(Step::Simple(1, Simplicity::Scalar));
    }
    let comm = commutant(acts, d);
    for i in 0..d.min(SPIN_UP_VECTORS) {
        let s = spin_up(acts, &[vec_ops::unit(d, i)]);
        if s.dim() < d {
            let u = s.basis().to_vec();
            let c = complement(&u, &comm, d)?;
            return Ok(Step::Split(vec![u, c]));
        }
    }
    if comm.len() == 1 {
        return Ok(Step::Simple(1, Simplicity::Scalar));
    }
    let e = comm.len();
    for trial in 0..SPLIT_TRIAL_CAP {
        let theta = if trial < e {
            comm[trial].clone()
        } else {
            let coeffs: Vec<Rational> = (0..e).map(|_| rat(rng.gen_range(-2..=2))).collect();
            combine_matrices(&coeffs, &comm, d)
        };
        let split = char_poly_and_rational_split(&theta);
        if split.factors.len() >= 2 {
            let pieces = split.factors.iter().map(|(f, k)| kernel(&f.pow(*k).eval_matrix(&theta))).collect();
            return Ok(Step::Split(pieces));
        }
        let (f, _) = &split.factors[0];
        let n = f.eval_matrix(&theta);
        if !n.is_zero() {
            let u = kernel(&n);
            let c = complement(&u, &comm, d)?;
            return Ok(Step::Split(vec![u, c]));
        }
        if f.degree() == Some(2) && e == 2 {
            let min_poly = f.coeffs().iter().map(|c| c.to_string()).collect();
            return Ok(Step::Simple(e, Simplicity::Field { min_poly }));
        }
    }
    Ok(Step::Simple(e, Simplicity::Unproven { trials: SPLIT_TRIAL_CAP }))
}

/// Splits `K^d` under the action matrices into simple summands, given in
/// the coordinates of `K^d`.
pub fn split_module(actions: &[QMatrix], d: usize, seed: u64) -> Result<Vec<SimpleSummand>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work: Vec<Vec<Vec<Rational>>> = vec![(0..d).map(|i| vec_ops::unit(d, i)).collect()];
    let mut out = Vec::new();
    while let Some(w) = work.pop() {
        if w.is_empty() {
            continue;
        }
        let acts = restrict(actions, &w)?;
        match analyze(&acts, w.len(), &mut rng)? {
            Step::Split(pieces) => {
                for p in pieces {
                    let n = w[0].len();
                    work.push(p.iter().map(|c| vec_ops::combine(c, &w, n)).collect());
                }
            }
            Step::Simple(commutant_dim, certificate) => {
                out.push(SimpleSummand { basis: w, commutant_dim, certificate })
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn rotation_plane_is_simple_with_field_commutant() {
        let j = q(&[&[0, -1], &[1, 0]]);
        let s = split_module(&[j], 2, 1).unwrap();
        assert_eq!(s.len(), 1);
        assert!(matches!(s[0].certificate, Simplicity::Field { .. }));
    }

    #[test]
    fn two_copies_of_rotation_split() {
        // J ⊕ J on R⁴: commutant M₂(Q(i)), two simple summands
        let j = q(&[&[0, -1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, -1], &[0, 0, 1, 0]]);
        let s = split_module(&[j], 4, 1).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|x| x.basis.len() == 2 && x.certificate.is_certified()));
    }

    #[test]
    fn diagonal_action_splits_into_lines() {
        let a = q(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 2]]);
        let s = split_module(&[a], 3, 1).unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn non_semisimple_module_is_rejected() {
        let n = q(&[&[0, 1], &[0, 0]]);
        assert!(split_module(&[n], 2, 1).is_err());
    }
}
