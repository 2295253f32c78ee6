//! Fock spaces `Λ(V)` for finite dimensional `V`, the canonical
//! anticommutation relations, and unitary representations built on them.

pub mod rep;
pub mod spin;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Parity;
use crate::exact::linalg::determinant;
use crate::exact::{CMatrix, QMatrix, Rational, Scalar};
use crate::{Error, Result};

pub use rep::{check_unitary_representation, Representation, UnitaryCheck};
pub use spin::{number_spectrum, spin_representation, tilde_tangent_representation, SpinVariant};

/// `Λ(V)` for `V = Cⁿ` with a real positive definite Gram matrix on the
/// generators. Basis vectors are wedge monomials indexed by bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockSpace {
    gram: QMatrix,
}

fn sign_before(mask: usize, k: usize) -> bool {
    (mask & ((1 << k) - 1)).count_ones() % 2 == 1
}

impl FockSpace {
    /// Orthonormal generators.
    pub fn new(n: usize) -> Self {
        FockSpace { gram: QMatrix::identity(n) }
    }

    pub fn with_gram(gram: QMatrix) -> Self {
        FockSpace { gram }
    }

    pub fn generators(&self) -> usize {
        self.gram.rows()
    }

    pub fn dim(&self) -> usize {
        1 << self.generators()
    }

    pub fn generator_gram(&self) -> &QMatrix {
        &self.gram
    }

    pub fn is_orthonormal(&self) -> bool {
        self.gram == QMatrix::identity(self.generators())
    }

    pub fn parity(&self, mask: usize) -> Parity {
        if mask.count_ones().is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn parities(&self) -> Vec<Parity> {
        (0..self.dim()).map(|m| self.parity(m)).collect()
    }

    /// `⟨e_S, e_T⟩ = det G[S, T]` for `|S| = |T|`, else `0`.
    pub fn gram(&self) -> QMatrix {
        let d = self.dim();
        let elems = |m: usize| (0..self.generators()).filter(|k| m >> k & 1 == 1).collect::<Vec<_>>();
        QMatrix::from_fn(d, d, |s, t| {
            if s.count_ones() != t.count_ones() {
                return Rational::zero();
            }
            if s == 0 {
                return Rational::one();
            }
            determinant(&self.gram.select(&elems(s), &elems(t)))
        })
    }

    fn check_len(&self, f: &[Scalar]) -> Result<()> {
        if f.len() != self.generators() {
            return Err(Error::DimensionMismatch { expected: self.generators(), got: f.len() });
        }
        Ok(())
    }

    /// `a₀(f)*: e_S ↦ f ∧ e_S`.
    pub fn creation(&self, f: &[Scalar]) -> Result<CMatrix> {
        self.check_len(f)?;
        let d = self.dim();
        let mut m = CMatrix::zeros(d, d);
        for s in 0..d {
            for (k, c) in f.iter().enumerate() {
                if c.is_zero() || s >> k & 1 == 1 {
                    continue;
                }
                let v = if sign_before(s, k) { -c.clone() } else { c.clone() };
                m[(s | 1 << k, s)] += v;
            }
        }
        Ok(m)
    }

    /// `a₀(f): f₁ ∧ ⋯ ∧ f_n ↦ Σ (−1)^{j+1} ⟨f_j, f⟩ f₁ ∧ ⋯ f̂_j ⋯ ∧ f_n`,
    /// antilinear in `f`.
    pub fn annihilation(&self, f: &[Scalar]) -> Result<CMatrix> {
        self.check_len(f)?;
        let n = self.generators();
        let d = self.dim();
        // ⟨e_k, f⟩ = Σ_l G_kl conj(f_l)
        let pairing: Vec<Scalar> = (0..n)
            .map(|k| f.iter().enumerate().fold(Scalar::zero(), |acc, (l, c)| acc + c.conj().scale(&self.gram[(k, l)])))
            .collect();
        let mut m = CMatrix::zeros(d, d);
        for s in 0..d {
            for (k, p) in pairing.iter().enumerate() {
                if p.is_zero() || s >> k & 1 == 0 {
                    continue;
                }
                let v = if sign_before(s, k) { -p.clone() } else { p.clone() };
                m[(s & !(1 << k), s)] += v;
            }
        }
        Ok(m)
    }

    /// `⟨f, g⟩` on the generators, linear in `f`.
    pub fn inner(&self, f: &[Scalar], g: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (a, x) in f.iter().enumerate() {
            for (b, y) in g.iter().enumerate() {
                acc += (x * &y.conj()).scale(&self.gram[(a, b)]);
            }
        }
        acc
    }

    /// `⟨Au, w⟩ = ⟨u, Bw⟩` for all basis vectors, i.e. `AᵀG = G·conj(B)`.
    pub fn is_adjoint_pair(&self, a: &CMatrix, b: &CMatrix) -> bool {
        let g = CMatrix::from_real(&self.gram());
        &a.transpose() * &g == &g * &b.conj()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CarViolation {
    pub relation: String,
    #[serde(serialize_with = "crate::unitar::ser::cvecs")]
    pub f: Vec<Scalar>,
    #[serde(serialize_with = "crate::unitar::ser::cvecs")]
    pub g: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CarReport {
    pub n: usize,
    pub pairs_checked: usize,
}

pub const CAR_RANDOM_VECTORS: usize = 20;

/// Operators for `a(f), a(g), a(f)*, a(g)*`.
pub struct CarOperators {
    pub af: CMatrix,
    pub ag: CMatrix,
    pub cf: CMatrix,
    pub cg: CMatrix,
}

fn check_pair(fs: &FockSpace, f: &[Scalar], g: &[Scalar]) -> Result<Option<CarViolation>> {
    let ops =
        CarOperators { af: fs.annihilation(f)?, ag: fs.annihilation(g)?, cf: fs.creation(f)?, cg: fs.creation(g)? };
    Ok(car_violation(fs, &ops, f, g))
}

/// The first relation among the CAR and adjointness that `ops` violate.
pub fn car_violation(fs: &FockSpace, ops: &CarOperators, f: &[Scalar], g: &[Scalar]) -> Option<CarViolation> {
    let CarOperators { af, ag, cf, cg } = ops;
    let violation = |relation: &str| Some(CarViolation { relation: relation.into(), f: f.to_vec(), g: g.to_vec() });
    if !(&(af * ag) + &(ag * af)).is_zero() {
        return violation("a(f)a(g) + a(g)a(f) = 0");
    }
    let id = CMatrix::identity(fs.dim()).scale(&fs.inner(g, f));
    if &(af * cg) + &(cg * af) != id {
        return violation("a(f)a(g)* + a(g)*a(f) = <g,f> 1");
    }
    if !fs.is_adjoint_pair(cf, af) {
        return violation("<a(f)* u, w> = <u, a(f) w>");
    }
    None
}

/// Both relations and adjointness on all pairs of standard generators and
/// on consecutive pairs of seeded random vectors with Gaussian-integer
/// entries.
pub fn check_car(fs: &FockSpace, seed: u64) -> Result<std::result::Result<CarReport, CarViolation>> {
    let n = fs.generators();
    let vectors: Vec<Vec<Scalar>> =
        (0..n).map(|k| (0..n).map(|l| if k == l { Scalar::one() } else { Scalar::zero() }).collect()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut random = Vec::new();
    for _ in 0..CAR_RANDOM_VECTORS {
        random.push((0..n).map(|_| Scalar::gauss(rng.gen_range(-3..=3), rng.gen_range(-3..=3))).collect::<Vec<_>>());
    }
    let mut pairs = 0;
    for f in &vectors {
        for g in &vectors {
            pairs += 1;
            if let Some(v) = check_pair(fs, f, g)? {
                return Ok(Err(v));
            }
        }
    }
    for (i, f) in random.iter().enumerate() {
        pairs += 1;
        if let Some(v) = check_pair(fs, f, &random[(i + 1) % random.len()])? {
            return Ok(Err(v));
        }
    }
    Ok(Ok(CarReport { n, pairs_checked: pairs }))
}
