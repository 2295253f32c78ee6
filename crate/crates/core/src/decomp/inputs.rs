//! Constructed algebras with known decompositions.

use crate::algebra::combinators::{direct_sum, direct_sum_all, quotient_by_central, semidirect_by_derivation};
use crate::algebra::{Parity, Subspace, SuperAlgebra};
use crate::exact::{rat, vec_ops, QMatrix};
use crate::families::abstract_algebras::{spin_h_hat, tangent, tangent_tilde};
use crate::families::{build, FamilySpec, KTag};
use crate::{Error, Result};

/// The odd derivation sending every `x.xi` basis vector to `x`.
pub fn xi_derivation(g: &SuperAlgebra) -> QMatrix {
    let n = g.dim();
    let mut d = QMatrix::zeros(n, n);
    for i in 0..n {
        if let Some(base) = g.space().label(i).strip_suffix(".xi") {
            if let Some(j) = g.space().labels().iter().position(|l| l == base) {
                d[(j, i)] = rat(1);
            }
        }
    }
    d
}

/// `(T̃k ⊕ Tk) ⋊ R·D` with one odd `D = ∂/∂ξ` acting on both summands.
pub fn tangent_pair(k: KTag) -> Result<SuperAlgebra> {
    let k = k.build()?;
    let sum = direct_sum(&tangent_tilde(&k)?, &tangent(&k)?).algebra;
    let g = semidirect_by_derivation(&sum, &xi_derivation(&sum), Parity::Odd, "D")?;
    Ok(g.with_name(format!("(T~{0} + T{0}) x| D", k.name())))
}

/// `su(2|1) ⊕ (T̃su(2) ⊕ Tsu(2)) ⋊ R·D`.
pub fn su21_with_tangents() -> Result<SuperAlgebra> {
    let su21 = build(FamilySpec::Su { n: 2, m: 1 })?.algebra;
    let g = direct_sum(&su21, &tangent_pair(KTag::Su(2))?).algebra;
    Ok(g.with_name("su(2|1) + (T~su2 + Tsu2) x| D"))
}

/// `(g ⊕ h)/R(z_g − z_h)` for central even vectors `z_g`, `z_h`.
pub fn glue_centers(
    g: &SuperAlgebra,
    zg: &[crate::Rational],
    h: &SuperAlgebra,
    zh: &[crate::Rational],
) -> Result<SuperAlgebra> {
    let s = direct_sum(g, h);
    let v = vec_ops::sub(&s.embed_left(zg), &s.embed_right(zh));
    let line = Subspace::span(s.algebra.dim(), &[v]);
    let q = quotient_by_central(&s.algebra, &line)?;
    Ok(q.algebra.with_name(format!("({} + {})/glued", g.name(), h.name())))
}

fn center_vector(g: &SuperAlgebra) -> Result<Vec<crate::Rational>> {
    let z = g.center();
    if z.dim() != 1 {
        return Err(Error::Precondition(format!("{} has center of dimension {}", g.name(), z.dim())));
    }
    Ok(z.basis()[0].clone())
}

/// `(su(2|2) ⊕ q(2))` with the centers identified.
pub fn glued_su22_q2() -> Result<SuperAlgebra> {
    let su22 = build(FamilySpec::Su { n: 2, m: 2 })?.algebra;
    let q2 = build(FamilySpec::Q { n: 2 })?.algebra;
    let z1 = center_vector(&su22)?;
    let z2 = center_vector(&q2)?;
    glue_centers(&su22, &z1, &q2, &z2)
}

/// `su(2|2) ⊕ ĥ(2)` with `ĥ` the spin algebra extended by its derivation.
pub fn su22_with_spin_hat() -> Result<SuperAlgebra> {
    let su22 = build(FamilySpec::Su { n: 2, m: 2 })?.algebra;
    let (g, _) = direct_sum_all(&[su22, spin_h_hat(2)?]);
    Ok(g.with_name("su(2|2) + spin_h^(2)"))
}

/// The five structure inputs by name.
pub fn named(name: &str) -> Result<SuperAlgebra> {
    match name {
        "su21-tangents" => su21_with_tangents(),
        "glued-su22-q2" => glued_su22_q2(),
        "q2" => Ok(build(FamilySpec::Q { n: 2 })?.algebra),
        "hatTsu2" => Ok(build(FamilySpec::THat(KTag::Su(2)))?.algebra),
        "su22-spin-hat" => su22_with_spin_hat(),
        _ => Err(Error::InvalidParameters(format!("unknown construction {name}"))),
    }
}

pub const NAMED: [&str; 5] = ["su21-tangents", "glued-su22-q2", "q2", "hatTsu2", "su22-spin-hat"];
