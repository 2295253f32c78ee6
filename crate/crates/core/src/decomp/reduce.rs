//! Reduction to the odd-generated case and the subspace `b`.

use crate::algebra::{subalgebra, Subalgebra, Subspace, SuperAlgebra};
use crate::{Error, Result};

/// `g ≅ h ⋊ c` with `h = [g₁, g₁] + g₁` and `c` an even complement of
/// `[g₁, g₁]` commuting with it.
#[derive(Clone, Debug)]
pub struct OddGenerated {
    pub h: Subspace,
    pub c: Subspace,
    pub algebra: Subalgebra,
}

pub fn reduce_to_odd_generated(g: &SuperAlgebra) -> Result<OddGenerated> {
    let n = g.dim();
    let g0 = g.even_part();
    let g1 = g.odd_part();
    let i = g.bracket_span(&g1, &g1);
    let h = i.sum(&g1);
    let centralizer = g.centralizer(&i, &g0);
    let z_i = i.intersection(&centralizer);
    let derived = g.bracket_span(&centralizer, &centralizer);
    let center_c = g.centralizer(&centralizer, &centralizer);
    // complement of z_i inside z(centralizer), chosen greedily from its basis
    let mut w = Subspace::zero(n);
    let mut acc = z_i.clone();
    for v in center_c.basis() {
        if !acc.contains(v) {
            let line = Subspace::span(n, std::slice::from_ref(v));
            acc = acc.sum(&line);
            w = w.sum(&line);
        }
    }
    let c = derived.sum(&w);
    if i.sum(&c).dim() != g0.dim() || !i.intersection(&c).is_zero() || !g.is_subalgebra(&c) {
        return Err(Error::Precondition(
            "[g1,g1] has no even complement commuting with it; g is outside the reductive pipeline".into(),
        ));
    }
    let algebra = subalgebra(g, &h, &format!("{}_odd-generated", g.name()))?;
    Ok(OddGenerated { h, c, algebra })
}

pub fn is_odd_generated(g: &SuperAlgebra) -> bool {
    let g1 = g.odd_part();
    g.bracket_span(&g1, &g1).dim() == g.d0()
}

/// `b = {Y ∈ g₁ : [Y, g₀] = 0}`; requires `g₀ = [g₁, g₁]` and checks
/// `[b, b] ⊆ z(g)`.
pub fn compute_b(g: &SuperAlgebra) -> Result<Subspace> {
    if !is_odd_generated(g) {
        return Err(Error::Precondition("g0 != [g1, g1]".into()));
    }
    let b = g.centralizer(&g.even_part(), &g.odd_part());
    if !g.center().contains_space(&g.bracket_span(&b, &b)) {
        return Err(Error::Defect("[b, b] is not central".into()));
    }
    Ok(b)
}
