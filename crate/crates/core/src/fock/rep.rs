//! Representations on graded spaces with an exact Gram matrix, and the
//! exact check of the homomorphism and unitarity conditions.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{Parity, SuperAlgebra};
use crate::exact::{is_positive_definite, kernel, CMatrix, QMatrix, Rational, Scalar};
use crate::families::Built;
use crate::{Error, Result};

/// `ρ` assigns an operator to each basis vector of `g`. The space carries
/// the real symmetric Gram matrix `gram`, `⟨u, w⟩ = Σ u_a G_ab conj(w_b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub name: String,
    pub parities: Vec<Parity>,
    pub gram: QMatrix,
    pub operators: Vec<CMatrix>,
}

/// The factor `−i^{|X|}` of the unitarity condition.
fn unitarity_factor(p: Parity) -> Scalar {
    match p {
        Parity::Even => Scalar::from_int(-1),
        Parity::Odd => -Scalar::i(),
    }
}

fn sign(p: Parity, q: Parity) -> Scalar {
    Scalar::from_int(p.sign(q))
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn image(&self, x: &[Rational]) -> CMatrix {
        let d = self.dim();
        x.iter().zip(&self.operators).fold(CMatrix::zeros(d, d), |acc, (c, m)| {
            if c.is_zero() {
                acc
            } else {
                &acc + &m.scale(&Scalar::real(c.clone()))
            }
        })
    }

    /// The zero representation on a one-dimensional even space.
    pub fn trivial(g: &SuperAlgebra) -> Self {
        Representation {
            name: format!("trivial({})", g.name()),
            parities: vec![Parity::Even],
            gram: QMatrix::identity(1),
            operators: vec![CMatrix::zeros(1, 1); g.dim()],
        }
    }

    /// The defining representation of a matrix family on `C^{p|q}`.
    pub fn defining(built: &Built) -> Result<Self> {
        let r = built
            .realization
            .as_ref()
            .ok_or_else(|| Error::Precondition(format!("{} has no matrix realization", built.spec)))?;
        let mut parities = vec![Parity::Even; r.p];
        parities.extend(std::iter::repeat_n(Parity::Odd, r.q));
        Ok(Representation {
            name: format!("defining({})", built.spec),
            gram: QMatrix::identity(r.p + r.q),
            parities,
            operators: r.basis.iter().map(|b| b.matrix().clone()).collect(),
        })
    }

    pub fn export(&self) -> RepresentationExport {
        RepresentationExport {
            name: self.name.clone(),
            space: SpaceExport { dim: self.dim(), parities: self.parities.iter().map(|p| p.bit()).collect() },
            gram_identity: self.gram == QMatrix::identity(self.dim()),
            gram: self.gram.clone(),
            operators: self
                .operators
                .iter()
                .enumerate()
                .map(|(i, m)| OperatorExport { basis_id: i.to_string(), matrix: m.clone() })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpaceExport {
    pub dim: usize,
    pub parities: Vec<u8>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OperatorExport {
    pub basis_id: String,
    #[serde(serialize_with = "crate::unitar::ser::cmatrix")]
    pub matrix: CMatrix,
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentationExport {
    pub name: String,
    pub space: SpaceExport,
    pub gram_identity: bool,
    #[serde(serialize_with = "crate::unitar::ser::matrix")]
    pub gram: QMatrix,
    pub operators: Vec<OperatorExport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Dimension { expected: usize, got: usize },
    GramNotPositive,
    GramNotEven,
    Parity { basis: usize },
    Homomorphism { pair: (usize, usize), lhs: String, rhs: String },
    Unitarity { basis: usize, v: usize, w: usize, lhs: String, rhs: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnitaryCheck {
    pub homomorphism: bool,
    pub unitary: bool,
    pub faithful: bool,
    pub kernel_dim: usize,
    pub checks: usize,
    pub violation: Option<Violation>,
}

impl UnitaryCheck {
    pub fn ok(&self) -> bool {
        self.homomorphism && self.unitary
    }
}

fn first_difference(a: &CMatrix, b: &CMatrix) -> Option<(usize, usize)> {
    (0..a.rows()).flat_map(|r| (0..a.cols()).map(move |c| (r, c))).find(|&(r, c)| a[(r, c)] != b[(r, c)])
}

fn structural_violation(g: &SuperAlgebra, rho: &Representation) -> Option<Violation> {
    let d = rho.dim();
    if rho.operators.len() != g.dim() {
        return Some(Violation::Dimension { expected: g.dim(), got: rho.operators.len() });
    }
    if rho.gram.rows() != d || rho.operators.iter().any(|m| m.rows() != d || m.cols() != d) {
        return Some(Violation::Dimension { expected: d, got: rho.gram.rows() });
    }
    if !matches!(is_positive_definite(&rho.gram), Ok(x) if x.is_positive()) {
        return Some(Violation::GramNotPositive);
    }
    let even = (0..d).all(|r| (0..d).all(|c| rho.parities[r] == rho.parities[c] || rho.gram[(r, c)].is_zero()));
    if !even {
        return Some(Violation::GramNotEven);
    }
    for (i, m) in rho.operators.iter().enumerate() {
        let p = g.parity(i);
        let homogeneous = (0..d).all(|r| {
            (0..d).all(|c| m[(r, c)].is_zero() || rho.parities[r].bit() == (rho.parities[c].bit() + p.bit()) % 2)
        });
        if !homogeneous {
            return Some(Violation::Parity { basis: i });
        }
    }
    None
}

/// `ρ([x, y]) = ρ(x)ρ(y) − (−1)^{|x||y|}ρ(y)ρ(x)` on all basis pairs,
/// `⟨ρ(X)v, w⟩ = ⟨v, −i^{|X|}ρ(X)w⟩` on all basis vectors `X`, `v`, `w`,
/// and the kernel of the linear extension of `ρ`.
pub fn check_unitary_representation(g: &SuperAlgebra, rho: &Representation) -> UnitaryCheck {
    let fail = |homomorphism: bool, v: Violation, checks: usize| UnitaryCheck {
        homomorphism,
        unitary: false,
        faithful: false,
        kernel_dim: 0,
        checks,
        violation: Some(v),
    };
    if let Some(v) = structural_violation(g, rho) {
        return fail(false, v, 0);
    }
    let mut checks = 0;
    for j in 0..g.dim() {
        for i in 0..=j {
            let lhs = rho.image(&g.basis_bracket(i, j));
            let (a, b) = (&rho.operators[i], &rho.operators[j]);
            let rhs = &(a * b) - &(b * a).scale(&sign(g.parity(i), g.parity(j)));
            checks += 1;
            if let Some((r, c)) = first_difference(&lhs, &rhs) {
                let v = Violation::Homomorphism {
                    pair: (i, j),
                    lhs: lhs[(r, c)].to_string(),
                    rhs: rhs[(r, c)].to_string(),
                };
                return fail(false, v, checks);
            }
        }
    }
    let gram = CMatrix::from_real(&rho.gram);
    for (i, a) in rho.operators.iter().enumerate() {
        let b = a.scale(&unitarity_factor(g.parity(i)));
        let lhs = &a.transpose() * &gram;
        let rhs = &gram * &b.conj();
        checks += rho.dim() * rho.dim();
        if let Some((v, w)) = first_difference(&lhs, &rhs) {
            let viol =
                Violation::Unitarity { basis: i, v, w, lhs: lhs[(v, w)].to_string(), rhs: rhs[(v, w)].to_string() };
            return fail(true, viol, checks);
        }
    }
    let cols: Vec<Vec<Rational>> = rho.operators.iter().map(|m| m.realified_coords()).collect();
    let kernel_dim = if cols.is_empty() { 0 } else { kernel(&QMatrix::from_cols(cols[0].len(), &cols)).len() };
    UnitaryCheck { homomorphism: true, unitary: true, faithful: kernel_dim == 0, kernel_dim, checks, violation: None }
}
