//! Sampled check of `[X, X] = 2X² = 2i·X*X` on odd elements of a matrix
//! realization.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::block::MatrixRealization;
use crate::algebra::SuperAlgebra;
use crate::exact::{rat, Rational, Scalar};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareIdentityReport {
    pub samples: usize,
    pub satisfied: usize,
    pub nonvanishing: usize,
    pub first_failure: Option<String>,
}

impl SquareIdentityReport {
    pub fn ok(&self) -> bool {
        self.satisfied == self.samples && self.nonvanishing == self.samples
    }
}

/// Draws `samples` nonzero odd elements with integer coordinates in
/// `[-3, 3]` and compares the bracket, the matrix square and `i·X*X`.
pub fn square_identity(
    g: &SuperAlgebra,
    real: &MatrixRealization,
    samples: usize,
    seed: u64,
) -> Result<SquareIdentityReport> {
    let odd = g.space().odd_indices();
    if odd.is_empty() {
        return Err(Error::Precondition(format!("{} has no odd part", g.name())));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SquareIdentityReport { samples: 0, satisfied: 0, nonvanishing: 0, first_failure: None };
    let two = Scalar::from_int(2);
    let two_i = Scalar::gauss(0, 2);
    while report.samples < samples {
        let mut x = vec![Rational::zero(); g.dim()];
        for k in odd.clone() {
            x[k] = rat(rng.gen_range(-3..=3));
        }
        if x.iter().all(Zero::is_zero) {
            continue;
        }
        report.samples += 1;
        let m = real.matrix_of(&x);
        let bracket = real.matrix_of(&g.bracket(&x, &x)?);
        let square = (&m * &m).scale(&two);
        let star = &m.conj_transpose() * &m;
        if bracket == square && square == star.scale(&two_i) {
            report.satisfied += 1;
        } else if report.first_failure.is_none() {
            report.first_failure = Some(format!("{:?}", x.iter().map(|c| c.to_string()).collect::<Vec<_>>()));
        }
        if !star.is_zero() {
            report.nonvanishing += 1;
        }
    }
    Ok(report)
}
