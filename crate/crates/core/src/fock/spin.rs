//! Spin representations of Clifford–Heisenberg algebras on `Λ(V)`, the
//! extension by the number operator, and the representation of `T̃k`.

use num_traits::{One, Zero};

use crate::algebra::forms::killing_restricted;
use crate::algebra::{Parity, SuperAlgebra};
use crate::exact::{char_poly_and_rational_split, rat, CMatrix, Rational, Scalar};
use crate::families::abstract_algebras::{spin_h, spin_h_hat, tangent_tilde};
use crate::families::KTag;
use crate::{Error, Result};

use super::rep::Representation;
use super::FockSpace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinVariant {
    /// `h = {(iz, v, −iv)}`.
    H,
    /// `h ⋊ R·d` with `ρ(d) = i·(degree)`.
    HHat,
}

fn unit(n: usize, k: usize, c: Scalar) -> Vec<Scalar> {
    (0..n).map(|l| if l == k { c.clone() } else { Scalar::zero() }).collect()
}

/// `ρ(0, u, −iu) = a(u)* + a(−iu) = a(u)* + i·a(u)`.
fn odd_operator(fs: &FockSpace, u: &[Scalar]) -> Result<CMatrix> {
    Ok(&fs.creation(u)? + &fs.annihilation(u)?.scale(&Scalar::i()))
}

/// `i·N` with `N` the degree on `Λ(V)`.
pub fn number_operator(fs: &FockSpace) -> CMatrix {
    let d = fs.dim();
    let diag: Vec<Scalar> = (0..d).map(|m| Scalar::new(Rational::zero(), rat(m.count_ones() as i64))).collect();
    CMatrix::diag(&diag)
}

/// The Fock representation of `spin_h(n)` or `spin_h^(n)` on `Λ(Cⁿ)`. The
/// odd basis `(x_k, y_k)` corresponds to `e_k` and `i·e_k`.
pub fn spin_representation(n: usize, variant: SpinVariant) -> Result<(SuperAlgebra, Representation)> {
    if n == 0 {
        return Err(Error::InvalidParameters("spin representation needs n >= 1".into()));
    }
    let fs = FockSpace::new(n);
    let d = fs.dim();
    let g = match variant {
        SpinVariant::H => spin_h(n)?,
        SpinVariant::HHat => spin_h_hat(n)?,
    };
    let mut operators = vec![CMatrix::identity(d).scale(&Scalar::i())];
    if variant == SpinVariant::HHat {
        operators.push(number_operator(&fs));
    }
    for k in 0..n {
        operators.push(odd_operator(&fs, &unit(n, k, Scalar::one()))?);
        operators.push(odd_operator(&fs, &unit(n, k, Scalar::i()))?);
    }
    let rep =
        Representation { name: format!("fock({})", g.name()), parities: fs.parities(), gram: fs.gram(), operators };
    Ok((g, rep))
}

/// Eigenvalues of `−i·m` with algebraic multiplicities, when `−i·m` is real
/// with rational spectrum.
pub fn number_spectrum(m: &CMatrix) -> Result<Vec<(Rational, usize)>> {
    let t = m.scale(&-Scalar::i());
    if !t.is_real() {
        return Err(Error::Precondition("-i m is not real".into()));
    }
    let split = char_poly_and_rational_split(&t.real_part());
    let total: usize = split.roots.iter().map(|(_, k)| k).sum();
    if total != m.rows() {
        return Err(Error::Precondition("spectrum is not rational".into()));
    }
    Ok(split.roots)
}

/// `T̃k` on `Λ(k_C)`: `k` acts by the derivation extension of `ad`, `c ↦ i·1`
/// and `y ⊗ ξ ↦ a(y)* + i·a(y)`, with Gram `−κ/2` on the generators so that
/// `2 Re⟨y, y′⟩ = −κ(y, y′)` matches `[y ⊗ ξ, y′ ⊗ ξ] = −κ(y, y′)·c`.
pub fn tilde_tangent_representation(tag: KTag) -> Result<(SuperAlgebra, Representation)> {
    let k = tag.build()?;
    let g = tangent_tilde(&k)?;
    let n = k.dim();
    let beta = killing_restricted(&k, Parity::Even).scale(&rat(-1));
    let fs = FockSpace::with_gram(beta.scale(&crate::exact::ratio(1, 2)));
    let plain = FockSpace::new(n);
    let dim = fs.dim();
    let creations: Vec<CMatrix> = (0..n).map(|l| fs.creation(&unit(n, l, Scalar::one()))).collect::<Result<_>>()?;
    let contractions: Vec<CMatrix> =
        (0..n).map(|l| plain.annihilation(&unit(n, l, Scalar::one()))).collect::<Result<_>>()?;
    let mut operators = Vec::with_capacity(g.dim());
    for a in 0..n {
        let ad = k.ad_basis(a);
        let mut m = CMatrix::zeros(dim, dim);
        for l in 0..n {
            for j in 0..n {
                if !ad[(l, j)].is_zero() {
                    m = &m + &(&creations[l] * &contractions[j]).scale(&Scalar::real(ad[(l, j)].clone()));
                }
            }
        }
        operators.push(m);
    }
    operators.push(CMatrix::identity(dim).scale(&Scalar::i()));
    for a in 0..n {
        operators.push(odd_operator(&fs, &unit(n, a, Scalar::one()))?);
    }
    if g.space().label(n) != "c" {
        return Err(Error::Defect("unexpected basis order in the extended tangent algebra".into()));
    }
    let rep =
        Representation { name: format!("fock({})", g.name()), parities: fs.parities(), gram: fs.gram(), operators };
    Ok((g, rep))
}
