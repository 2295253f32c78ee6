//! Invariant functionals `ω` on `g₀` and positivity of
//! `κ_ω(X, Y) = ω([X, Y])` on `g₁`.

use num_traits::Zero;
use serde::Serialize;

use super::search::{search_positive_combination, PdSearch, LP_ITERATION_CAP};
use super::ser;
use crate::algebra::forms::invariant_forms;
use crate::algebra::{Parity, SuperAlgebra};
use crate::exact::linalg::IncrementalKernel;
use crate::exact::{is_positive_definite, vec_ops, Definiteness, QMatrix, Rational};

/// Basis of `{ω ∈ g₀* : ω([g₀, g₀]) = 0}`, in the dual of the even basis.
pub fn invariant_functional_basis(g: &SuperAlgebra) -> Vec<Vec<Rational>> {
    let d0 = g.d0();
    let g0 = g.even_part();
    let derived = g.bracket_span(&g0, &g0);
    let rows: Vec<Vec<Rational>> = derived.basis().iter().map(|v| v[..d0].to_vec()).collect();
    let mut inc = IncrementalKernel::new(d0);
    inc.constrain(&rows);
    inc.basis()
}

/// `κ_ω(x_a, x_b) = ω([x_a, x_b])` for a functional on `g₀`.
pub fn kappa_gram(g: &SuperAlgebra, omega: &[Rational]) -> QMatrix {
    let (d0, d1) = (g.d0(), g.d1());
    let mut m = QMatrix::zeros(d1, d1);
    for a in 0..d1 {
        for b in a..d1 {
            let mut s = Rational::zero();
            g.for_each_term(d0 + a, d0 + b, |k, c| {
                if k < d0 && !omega[k].is_zero() {
                    s += c * &omega[k];
                }
            });
            m[(b, a)] = s.clone();
            m[(a, b)] = s;
        }
    }
    m
}

/// One Gram matrix per invariant functional basis vector.
pub fn kappa_grams(g: &SuperAlgebra, basis: &[Vec<Rational>]) -> Vec<QMatrix> {
    basis.iter().map(|w| kappa_gram(g, w)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Coordinates in the invariant functional basis.
    #[serde(serialize_with = "ser::vec")]
    pub coefficients: Vec<Rational>,
    /// The functional on `g₀` in the dual of the even basis.
    #[serde(serialize_with = "ser::vec")]
    pub functional: Vec<Rational>,
    #[serde(serialize_with = "ser::matrix")]
    pub gram: QMatrix,
    #[serde(serialize_with = "ser::vec")]
    pub minors: Vec<Rational>,
    pub lp_iterations: usize,
}

impl Witness {
    /// Recomputes everything from `g` and the functional: it must vanish on
    /// `[g₀, g₀]` and give a positive definite `κ_ω` with the stored minors.
    pub fn verify(&self, g: &SuperAlgebra) -> bool {
        let d0 = g.d0();
        if self.functional.len() != d0 {
            return false;
        }
        let g0 = g.even_part();
        let derived = g.bracket_span(&g0, &g0);
        if derived.basis().iter().any(|v| !vec_ops::dot(&v[..d0], &self.functional).is_zero()) {
            return false;
        }
        let gram = kappa_gram(g, &self.functional);
        if gram != self.gram {
            return false;
        }
        matches!(is_positive_definite(&gram), Ok(Definiteness::Positive { minors }) if minors == self.minors)
    }

    /// The witness for `r·ω`, recomputed from scratch.
    pub fn scaled(&self, g: &SuperAlgebra, r: &Rational) -> Option<Witness> {
        let functional = vec_ops::scale(&self.functional, r);
        let gram = kappa_gram(g, &functional);
        match is_positive_definite(&gram) {
            Ok(Definiteness::Positive { minors }) => Some(Witness {
                coefficients: vec_ops::scale(&self.coefficients, r),
                functional,
                gram,
                minors,
                lp_iterations: self.lp_iterations,
            }),
            _ => None,
        }
    }

    /// `ω([X, X])` for an odd vector given in odd coordinates.
    pub fn evaluate_square(&self, x: &[Rational]) -> Rational {
        crate::exact::posdef::quadratic_form(&self.gram, x)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum WitnessOutcome {
    Found(Witness),
    /// No `ω` works. Either the functional space is zero, or every `ω`
    /// fails positivity on one of the listed odd vectors.
    NoWitness {
        reason: String,
        #[serde(serialize_with = "ser::vecs")]
        cuts: Vec<Vec<Rational>>,
    },
    Inconclusive {
        reason: String,
        lp_iterations: usize,
    },
}

impl WitnessOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            WitnessOutcome::Found(w) => Some(w),
            _ => None,
        }
    }
}

pub const TRIVIAL_EVEN_CENTER: &str = "center of even part is trivial";

pub fn find_witness(g: &SuperAlgebra) -> WitnessOutcome {
    let basis = invariant_functional_basis(g);
    if basis.is_empty() {
        return WitnessOutcome::NoWitness { reason: TRIVIAL_EVEN_CENTER.into(), cuts: vec![] };
    }
    let grams = kappa_grams(g, &basis);
    match search_positive_combination(&grams, g.d1(), LP_ITERATION_CAP) {
        PdSearch::Found { coeffs, gram, minors, lp_iterations } => {
            let functional = vec_ops::combine(&coeffs, &basis, g.d0());
            WitnessOutcome::Found(Witness { coefficients: coeffs, functional, gram, minors, lp_iterations })
        }
        PdSearch::Infeasible { cuts } => WitnessOutcome::NoWitness {
            reason: "every invariant functional fails positivity on one of the listed odd vectors".into(),
            cuts,
        },
        PdSearch::Inconclusive { lp_iterations } => {
            WitnessOutcome::Inconclusive { reason: "iteration cap reached".into(), lp_iterations }
        }
    }
}

/// Result of the positive form search on one parity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FormSearch {
    Positive {
        #[serde(serialize_with = "ser::matrix")]
        gram: QMatrix,
        #[serde(serialize_with = "ser::vec")]
        minors: Vec<Rational>,
    },
    None {
        forms: usize,
        #[serde(serialize_with = "ser::vecs")]
        cuts: Vec<Vec<Rational>>,
    },
    Inconclusive {
        forms: usize,
    },
}

fn positive_invariant_form(g: &SuperAlgebra, p: Parity) -> FormSearch {
    let d = if p.is_odd() { g.d1() } else { g.d0() };
    let forms = invariant_forms(g, p);
    match search_positive_combination(&forms, d, LP_ITERATION_CAP) {
        PdSearch::Found { gram, minors, .. } => FormSearch::Positive { gram, minors },
        PdSearch::Infeasible { cuts } => FormSearch::None { forms: forms.len(), cuts },
        PdSearch::Inconclusive { .. } => FormSearch::Inconclusive { forms: forms.len() },
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Compactness {
    pub even: FormSearch,
    pub odd: FormSearch,
}

impl Compactness {
    pub fn is_compact(&self) -> bool {
        matches!((&self.even, &self.odd), (FormSearch::Positive { .. }, FormSearch::Positive { .. }))
    }

    pub fn is_not_compact(&self) -> bool {
        matches!(self.even, FormSearch::None { .. }) || matches!(self.odd, FormSearch::None { .. })
    }
}

/// Looks for `g₀`-invariant positive definite forms on `g₀` and on `g₁`.
pub fn compactness_check(g: &SuperAlgebra) -> Compactness {
    Compactness { even: positive_invariant_form(g, Parity::Even), odd: positive_invariant_form(g, Parity::Odd) }
}
