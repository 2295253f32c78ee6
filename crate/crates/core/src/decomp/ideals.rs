//! The ideals `g(j)` for `j ∈ J_s` and `c(k)` for `k ∈ J_a`, with their
//! structural checks.

use serde::Serialize;

use crate::algebra::combinators::quotient_by_central;
use crate::algebra::module::{commutant, restricted_action, spin_up};
use crate::algebra::{subalgebra, CoordinateBasis, Parity, Subspace, SuperAlgebra};
use crate::exact::{vec_ops, Rational};
use crate::families::abstract_algebras::{tangent, tangent_hat};
use crate::unitar::{classify_fingerprint, fingerprint, Classification, Fingerprint};
use crate::Result;

use super::{same_space, Checks, IndexClasses, ModuleDecomposition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum IdealKind {
    /// `g(j)` for the pair `{j, j′}` (equal when `j′ = j`).
    G {
        j: usize,
        partner: usize,
    },
    C {
        k: usize,
    },
}

#[derive(Clone, Debug)]
pub struct Ideal {
    pub kind: IdealKind,
    pub space: Subspace,
    pub fingerprint: Fingerprint,
    pub classification: Classification,
    pub checks: Checks,
}

fn algebra_of(g: &SuperAlgebra, s: &Subspace, name: &str) -> Result<SuperAlgebra> {
    Ok(subalgebra(g, s, name)?.algebra)
}

/// `g(j) = a_j + a_j′ + [a_j + a_j′, a_j + a_j′]`.
fn g_ideal(g: &SuperAlgebra, dec: &ModuleDecomposition, j: usize, jp: usize) -> Result<Ideal> {
    let n = g.dim();
    let aj = &dec.summands[j].space;
    let ajp = &dec.summands[jp].space;
    let odd = aj.sum(ajp);
    let space = odd.sum(&g.bracket_span(&odd, &odd));
    let mut checks = Checks::default();
    let tag = format!("g({j})");
    checks.record(format!("{tag} is an ideal"), g.is_ideal(&space));
    let even = space.homogeneous_part(g, Parity::Even);
    let sub = subalgebra(g, &space, &tag)?;
    let z_local: Vec<Vec<Rational>> = sub.algebra.center().basis().iter().map(|c| sub.basis.combine(c)).collect();
    let z_local = Subspace::span(n, &z_local);
    checks.record(format!("z({tag}) in z(g)_0"), g.center().homogeneous_part(g, Parity::Even).contains_space(&z_local));
    let g0 = g.even_part();
    checks
        .record(format!("z({tag}_0) in z(g_0)"), g.centralizer(&g0, &g0).contains_space(&g.centralizer(&even, &even)));
    checks.record(format!("{tag}_0 has no invariants in {tag}_1"), g.centralizer(&even, &odd).is_zero());
    let basis = CoordinateBasis::new(n, aj.basis().to_vec())?;
    let actions = restricted_action(g, even.basis(), &basis)?;
    let simple = spin_up(&actions, &[vec_ops::unit(basis.len(), 0)]).dim() == basis.len()
        && commutant(&actions, basis.len()).len() == dec.summands[j].commutant_dim;
    checks.record(format!("a_{j} is simple over {tag}_0"), simple);
    let center = sub.algebra.center();
    let pg = quotient_by_central(&sub.algebra, &center)?.algebra;
    checks.record(format!("p{tag} has zero center"), pg.center().is_zero());
    checks.record(format!("p{tag} is perfect"), pg.is_perfect());
    Ok(Ideal {
        kind: IdealKind::G { j, partner: jp },
        fingerprint: fingerprint(&sub.algebra),
        classification: classify_fingerprint(&sub.algebra),
        space,
        checks,
    })
}

/// An element `b₀ ∈ b` with `ad b₀ : a_k → [b, a_k]` bijective.
fn bijective_b0(g: &SuperAlgebra, b: &Subspace, ak: &Subspace, kk: &Subspace) -> Option<Vec<Rational>> {
    let n = g.dim();
    let mut candidates: Vec<Vec<Rational>> = b.basis().to_vec();
    if b.dim() > 1 {
        candidates.push(b.basis().iter().fold(vec_ops::zero(n), |acc, v| vec_ops::add(&acc, v)));
    }
    candidates.into_iter().find(|b0| {
        let images: Vec<_> = ak.basis().iter().map(|y| g.bracket_unchecked(b0, y)).collect();
        let s = Subspace::span(n, &images);
        s.dim() == ak.dim() && same_space(&s, kk)
    })
}

/// Checks `c(k)/z(c(k)) ≅ T k_k` through `x_i ↦ x_i`, `x_i ⊗ ξ ↦ (ad b₀)⁻¹ x_i`.
fn tangent_isomorphism(g: &SuperAlgebra, ck: &Subspace, ak: &Subspace, kk: &Subspace, b0: &[Rational]) -> Result<bool> {
    let n = g.dim();
    let k = subalgebra(g, kk, "k")?;
    let d = k.basis.len();
    let images: Vec<_> = ak.basis().iter().map(|y| g.bracket_unchecked(b0, y)).collect();
    let inv = CoordinateBasis::new(n, images)?;
    let mut psi: Vec<Vec<Rational>> = k.basis.vectors.clone();
    for x in &k.basis.vectors {
        let Some(c) = inv.coordinates(x) else { return Ok(false) };
        psi.push(vec_ops::combine(&c, ak.basis(), n));
    }
    let t = tangent(&k.algebra)?;
    let z = g.centralizer(ck, ck);
    if Subspace::span(n, &psi).sum(&z).dim() != ck.dim() || psi.len() + z.dim() != ck.dim() {
        return Ok(false);
    }
    for p in 0..2 * d {
        for q in p..2 * d {
            let image = vec_ops::combine(&t.basis_bracket(p, q), &psi, n);
            let direct = g.bracket_unchecked(&psi[p], &psi[q]);
            if !z.contains(&vec_ops::sub(&image, &direct)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `c(k) = a_k + [a_k, a_k] + [b, a_k]`.
fn c_ideal(g: &SuperAlgebra, dec: &ModuleDecomposition, k: usize) -> Result<Ideal> {
    let n = g.dim();
    let ak = &dec.summands[k].space;
    let b = &dec.b;
    let sq = g.bracket_span(ak, ak);
    let kk = g.bracket_span(b, ak);
    let space = ak.sum(&sq).sum(&kk);
    let tag = format!("c({k})");
    let mut checks = Checks::default();
    checks.record(format!("{tag} is an ideal"), g.is_ideal(&space));
    let kalg = algebra_of(g, &kk, &format!("k_{k}"))?;
    checks.record(format!("k_{k} has zero center"), kalg.center().is_zero());
    checks.record(format!("k_{k} is perfect"), kalg.is_perfect());
    let ads: Vec<_> = (0..kalg.dim()).map(|i| kalg.ad_basis(i)).collect();
    checks.record(format!("k_{k} has adjoint commutant of dimension 1"), commutant(&ads, kalg.dim()).len() == 1);
    let b0 = bijective_b0(g, b, ak, &kk);
    let iso = match &b0 {
        Some(b0) => tangent_isomorphism(g, &space, ak, &kk, b0)?,
        None => false,
    };
    checks.record(format!("{tag}/z({tag}) is the tangent algebra of k_{k}"), iso);
    let nil = ak.sum(&sq);
    checks.record(
        format!("a_{k} + [a_{k},a_{k}] is a nilpotent ideal of {tag}"),
        nil.contains_space(&g.bracket_span(&space, &nil))
            && g.bracket_span(&nil, &g.bracket_span(&nil, &nil)).is_zero(),
    );
    let hat = match &b0 {
        Some(b0) => {
            let line = Subspace::span(n, &[b0.clone(), g.bracket_unchecked(b0, b0)]);
            let s = space.sum(&line);
            if g.is_subalgebra(&s) {
                let sub = algebra_of(g, &s, &format!("{tag}^"))?;
                let z = sub.center();
                let reduced = quotient_by_central(&sub, &z)?.algebra;
                fingerprint(&reduced) == fingerprint(&tangent_hat(&kalg)?)
            } else {
                false
            }
        }
        None => false,
    };
    checks.record(format!("{tag} + R b0 + R [b0,b0] modulo center matches the extended tangent algebra"), hat);
    let sub = algebra_of(g, &space, &tag)?;
    Ok(Ideal {
        kind: IdealKind::C { k },
        fingerprint: fingerprint(&sub),
        classification: classify_fingerprint(&sub),
        space,
        checks,
    })
}

/// One `g(j)` per pair `{j, j′}` and one `c(k)` per `k ∈ J_a`.
pub fn build_ideals(g: &SuperAlgebra, dec: &ModuleDecomposition, classes: &IndexClasses) -> Result<Vec<Ideal>> {
    let mut out = Vec::new();
    for j in classes.js() {
        let jp = classes.partner(j).expect("J_s index has a partner");
        if j <= jp {
            out.push(g_ideal(g, dec, j, jp)?);
        }
    }
    for k in classes.ja() {
        out.push(c_ideal(g, dec, k)?);
    }
    Ok(out)
}
