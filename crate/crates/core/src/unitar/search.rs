//! Search for a positive definite member of a linear family of symmetric
//! matrices: small candidates first, then an exact cutting-plane loop.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::exact::lp::{maximize, LpResult};
use crate::exact::posdef::quadratic_form;
use crate::exact::{is_positive_definite, rat, Definiteness, QMatrix, Rational};

pub const LP_ITERATION_CAP: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PdSearch {
    /// `Σ coeffs_i G_i` is positive definite; `minors` are its leading
    /// principal minors.
    Found {
        coeffs: Vec<Rational>,
        gram: QMatrix,
        minors: Vec<Rational>,
        lp_iterations: usize,
    },
    /// No member is positive definite: every `t` violates one of the cuts,
    /// i.e. `Σ t_i vᵀG_i v ≤ 0` for some listed `v`, as the linear program
    /// over the cuts shows.
    Infeasible {
        cuts: Vec<Vec<Rational>>,
    },
    Inconclusive {
        lp_iterations: usize,
    },
}

fn combine(grams: &[QMatrix], t: &[Rational], d: usize) -> QMatrix {
    let mut g = QMatrix::zeros(d, d);
    for (c, m) in t.iter().zip(grams) {
        if !c.is_zero() {
            g = &g + &m.scale(c);
        }
    }
    g
}

fn check(grams: &[QMatrix], t: &[Rational], d: usize) -> (QMatrix, Definiteness) {
    let g = combine(grams, t, d);
    let r = is_positive_definite(&g).expect("family of symmetric matrices");
    (g, r)
}

/// Small integer coefficient vectors with entries in `{−1, 0, 1}`, the
/// single-generator ones first.
fn small_candidates(m: usize) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    for i in 0..m {
        for s in [1, -1] {
            let mut t = vec![Rational::zero(); m];
            t[i] = rat(s);
            out.push(t);
        }
    }
    if m <= 5 && m > 1 {
        let total = 3usize.pow(m as u32);
        for code in 0..total {
            let mut t = Vec::with_capacity(m);
            let mut c = code;
            for _ in 0..m {
                t.push(rat((c % 3) as i64 - 1));
                c /= 3;
            }
            if t.iter().filter(|x| !x.is_zero()).count() > 1 {
                out.push(t);
            }
        }
    }
    out
}

/// Finds `t` with `Σ t_i G_i` positive definite, for symmetric `d×d` `G_i`.
pub fn search_positive_combination(grams: &[QMatrix], d: usize, cap: usize) -> PdSearch {
    let m = grams.len();
    if d == 0 {
        return PdSearch::Found {
            coeffs: vec![Rational::zero(); m],
            gram: QMatrix::zeros(0, 0),
            minors: vec![],
            lp_iterations: 0,
        };
    }
    if m == 0 {
        return PdSearch::Infeasible { cuts: vec![crate::exact::vec_ops::unit(d, 0)] };
    }
    for t in small_candidates(m) {
        if let (g, Definiteness::Positive { minors }) = check(grams, &t, d) {
            return PdSearch::Found { coeffs: t, gram: g, minors, lp_iterations: 0 };
        }
    }
    let mut cuts: Vec<Vec<Rational>> = (0..d).map(|a| crate::exact::vec_ops::unit(d, a)).collect();
    for it in 1..=cap {
        // variables: t⁺ (m), t⁻ (m), s⁺, s⁻ ; maximize s⁺ − s⁻
        let nv = 2 * m + 2;
        let mut a = Vec::new();
        let mut b = Vec::new();
        for v in &cuts {
            let mut row = vec![Rational::zero(); nv];
            for (i, g) in grams.iter().enumerate() {
                let q = quadratic_form(g, v);
                row[i] = -q.clone();
                row[m + i] = q;
            }
            row[2 * m] = Rational::one();
            row[2 * m + 1] = -Rational::one();
            a.push(row);
            b.push(Rational::zero());
        }
        for j in 0..=2 * m {
            let mut row = vec![Rational::zero(); nv];
            row[j] = Rational::one();
            a.push(row);
            b.push(Rational::one());
        }
        let mut c = vec![Rational::zero(); nv];
        c[2 * m] = Rational::one();
        c[2 * m + 1] = -Rational::one();
        let LpResult::Optimal { x, value } = maximize(&c, &a, &b) else {
            return PdSearch::Inconclusive { lp_iterations: it };
        };
        if !value.is_positive() {
            return PdSearch::Infeasible { cuts };
        }
        let t: Vec<Rational> = (0..m).map(|i| &x[i] - &x[m + i]).collect();
        match check(grams, &t, d) {
            (g, Definiteness::Positive { minors }) => {
                return PdSearch::Found { coeffs: t, gram: g, minors, lp_iterations: it };
            }
            (_, Definiteness::NotPositive { witness, .. }) => cuts.push(witness),
        }
    }
    PdSearch::Inconclusive { lp_iterations: cap }
}

/// Re-checks an infeasibility certificate: the cut program has no strictly
/// positive optimum.
pub fn recheck_infeasible(grams: &[QMatrix], cuts: &[Vec<Rational>]) -> bool {
    let m = grams.len();
    if m == 0 {
        return true;
    }
    let nv = 2 * m + 2;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for v in cuts {
        let mut row = vec![Rational::zero(); nv];
        for (i, g) in grams.iter().enumerate() {
            let q = quadratic_form(g, v);
            row[i] = -q.clone();
            row[m + i] = q;
        }
        row[2 * m] = Rational::one();
        row[2 * m + 1] = -Rational::one();
        a.push(row);
        b.push(Rational::zero());
    }
    for j in 0..=2 * m {
        let mut row = vec![Rational::zero(); nv];
        row[j] = Rational::one();
        a.push(row);
        b.push(Rational::one());
    }
    let mut c = vec![Rational::zero(); nv];
    c[2 * m] = Rational::one();
    c[2 * m + 1] = -Rational::one();
    matches!(maximize(&c, &a, &b), LpResult::Optimal { value, .. } if !value.is_positive())
}

/// Serializable summary of a positive definite certificate.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct PdCertificate {
    pub coefficients: Vec<String>,
    pub minors: Vec<String>,
}

pub fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn finds_combination_needing_lp() {
        // diag(1, −1) and diag(−1, 3): t = (2, 1) gives diag(1, 1)
        let g = [q(&[&[1, 0], &[0, -1]]), q(&[&[-1, 0], &[0, 3]])];
        match search_positive_combination(&g, 2, LP_ITERATION_CAP) {
            PdSearch::Found { gram, .. } => assert!(is_positive_definite(&gram).unwrap().is_positive()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn certifies_indefinite_family() {
        let g = [q(&[&[1, 0], &[0, -1]]), q(&[&[0, 1], &[1, 0]])];
        match search_positive_combination(&g, 2, LP_ITERATION_CAP) {
            PdSearch::Infeasible { cuts } => assert!(recheck_infeasible(&g, &cuts)),
            other => panic!("{other:?}"),
        }
    }
}
