//! The full pipeline: `[g, g] = z(g)₀ + Σ g(j) + Σ c(k)` with central kernel,
//! the per-ideal flags, and the splitting of `g/z(g)₀` along `z_b(a)`.

use serde::Serialize;

use crate::algebra::{subalgebra, Parity, Subspace, SuperAlgebra};
use crate::exact::{kernel, vec_ops, QMatrix, Rational};
use crate::families::{build, FamilySpec};
use crate::unitar::{fingerprint, Fingerprint};
use crate::{Error, Result};

use super::ideals::{build_ideals, Ideal, IdealKind};
use super::reduce::{compute_b, is_odd_generated, reduce_to_odd_generated};
use super::split::Simplicity;
use super::{classify_indices, decompose_odd, same_space, Assertion, Checks, IndexClasses, ModuleDecomposition};

/// Flags for the special ideal kinds; `None` when the kind does not apply.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    /// su(n|m) with n ≠ m or c(n): `g = ideal ⊕ centralizer`.
    pub direct_summand: Option<bool>,
    /// su(n|n): `[b, g(j)] = 0`.
    pub b_commutes: Option<bool>,
    /// q(n) with `[b, a_j] ≠ 0`: `g(j) + R b₀ + R [b₀, b₀]` matches q̂(n).
    pub q_hat_embedding: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummandReport {
    pub index: usize,
    pub dim: usize,
    pub kind: &'static str,
    pub pair: Option<usize>,
    pub commutant_dim: usize,
    pub simplicity: Simplicity,
    pub ideal: usize,
    pub ideal_dim: usize,
    pub fingerprint: Fingerprint,
    pub family_kinds: Vec<String>,
    pub structure_flags: StructureFlags,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionReport {
    pub algebra: String,
    pub seed: u64,
    pub reduced_to_odd_generated: bool,
    pub dim: usize,
    pub b_dim: usize,
    pub center_dim: usize,
    pub summands: Vec<SummandReport>,
    pub kernel_dim: usize,
    #[serde(serialize_with = "crate::unitar::ser::vecs")]
    pub kernel_basis: Vec<Vec<Rational>>,
    pub assertions: Vec<Assertion>,
}

/// Everything the pipeline computed; subspaces live in `algebra`, which is
/// the odd-generated reduction of the input when that differs from it.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub algebra: SuperAlgebra,
    pub module: ModuleDecomposition,
    pub classes: IndexClasses,
    pub ideals: Vec<Ideal>,
    pub flags: Vec<StructureFlags>,
    pub kernel: Vec<Vec<Rational>>,
    pub report: DecompositionReport,
}

impl Decomposition {
    pub fn js_count(&self) -> usize {
        self.classes.js().len()
    }

    pub fn ja_count(&self) -> usize {
        self.classes.ja().len()
    }

    pub fn ideal_of(&self, index: usize) -> usize {
        ideal_index(&self.ideals, index)
    }
}

fn ideal_index(ideals: &[Ideal], index: usize) -> usize {
    ideals
        .iter()
        .position(|i| match i.kind {
            IdealKind::G { j, partner } => j == index || partner == index,
            IdealKind::C { k } => k == index,
        })
        .expect("every index has an ideal")
}

fn has_kind(ideal: &Ideal, kind: &str) -> bool {
    ideal.classification.kinds().iter().any(|k| k == kind)
}

/// `q(n)` has `dim q(n)₀ = (n + 1)²`.
fn q_rank(d0: usize) -> Option<usize> {
    let r = (d0 as f64).sqrt().round() as usize;
    (r * r == d0 && r >= 2).then(|| r - 1)
}

fn flags_for(g: &SuperAlgebra, b: &Subspace, dec: &ModuleDecomposition, ideal: &Ideal) -> Result<StructureFlags> {
    let IdealKind::G { j, .. } = ideal.kind else { return Ok(StructureFlags::default()) };
    let mut flags = StructureFlags::default();
    let space = &ideal.space;
    if has_kind(ideal, "su(n|m)") || has_kind(ideal, "c(n)") {
        let c = g.centralizer(space, &g.whole());
        flags.direct_summand =
            Some(space.intersection(&c).is_zero() && space.dim() + c.dim() == g.dim() && g.is_ideal(&c));
    }
    if has_kind(ideal, "su(n|n)") {
        flags.b_commutes = Some(g.bracket_span(b, space).is_zero());
    }
    let aj = &dec.summands[j].space;
    if has_kind(ideal, "q(n)") && !g.bracket_span(b, aj).is_zero() {
        let embedded = match (
            q_rank(ideal.fingerprint.d0),
            b.basis().iter().find(|b0| !g.bracket_span(&Subspace::span(g.dim(), &[(*b0).clone()]), aj).is_zero()),
        ) {
            (Some(n), Some(b0)) => {
                let s = space.sum(&Subspace::span(g.dim(), &[b0.clone(), g.bracket_unchecked(b0, b0)]));
                g.is_subalgebra(&s) && {
                    let sub = subalgebra(g, &s, "q_hat")?.algebra;
                    Some(fingerprint(&sub)) == build(FamilySpec::QHat { n }).ok().map(|m| fingerprint(&m.algebra))
                }
            }
            _ => false,
        };
        flags.q_hat_embedding = Some(embedded);
    }
    Ok(flags)
}

/// Kernel of `⊕ ideals → g`, as vectors of the external direct sum.
fn summation_kernel(n: usize, ideals: &[Ideal]) -> Vec<Vec<Rational>> {
    let cols: Vec<Vec<Rational>> = ideals.iter().flat_map(|i| i.space.basis().iter().cloned()).collect();
    if cols.is_empty() {
        return Vec::new();
    }
    kernel(&QMatrix::from_cols(n, &cols))
}

/// Runs the pipeline on `g`, first passing to `[g₁, g₁] + g₁` when `g` is
/// not generated by its odd part.
pub fn structure_report(g: &SuperAlgebra, seed: u64) -> Result<Decomposition> {
    if g.bracket_span(&g.odd_part(), &g.odd_part()).is_zero() {
        return Err(Error::Precondition("odd-generation precondition: [g1, g1] = 0".into()));
    }
    let reduced = !is_odd_generated(g);
    let h = if reduced { reduce_to_odd_generated(g)?.algebra.algebra } else { g.clone() };
    let n = h.dim();
    let center = h.center();
    if !center.homogeneous_part(&h, Parity::Odd).is_zero() {
        return Err(Error::Precondition("z(g) has an odd part".into()));
    }
    let b = compute_b(&h)?;
    let module = decompose_odd(&h, &b, seed)?;
    let classes = classify_indices(&h, &module)?;
    let ideals = build_ideals(&h, &module, &classes)?;
    let mut checks = classes.checks.clone();
    for i in &ideals {
        checks.0.extend(i.checks.0.iter().cloned());
    }
    let derived = h.derived();
    let total = Subspace::sum_all(n, ideals.iter().map(|i| &i.space)).sum(&center.homogeneous_part(&h, Parity::Even));
    checks.record("[g,g] = z(g)_0 + sum of ideals", same_space(&derived, &total));
    let kernel = summation_kernel(n, &ideals);
    let central = kernel.iter().all(|v| {
        let mut offset = 0;
        ideals.iter().all(|i| {
            let d = i.space.dim();
            let part = vec_ops::combine(&v[offset..offset + d], i.space.basis(), n);
            offset += d;
            center.contains(&part)
        })
    });
    checks.record("summation kernel is central", central);
    let flags = ideals.iter().map(|i| flags_for(&h, &b, &module, i)).collect::<Result<Vec<_>>>()?;
    let mut summands = Vec::new();
    for (index, s) in module.summands.iter().enumerate() {
        let ideal = ideal_index(&ideals, index);
        summands.push(SummandReport {
            index,
            dim: s.space.dim(),
            kind: if classes.partner(index).is_some() { "Js" } else { "Ja" },
            pair: classes.partner(index),
            commutant_dim: s.commutant_dim,
            simplicity: s.certificate.clone(),
            ideal,
            ideal_dim: ideals[ideal].space.dim(),
            fingerprint: ideals[ideal].fingerprint.clone(),
            family_kinds: ideals[ideal].classification.kinds().to_vec(),
            structure_flags: flags[ideal].clone(),
        });
    }
    let report = DecompositionReport {
        algebra: g.name().to_string(),
        seed,
        reduced_to_odd_generated: reduced,
        dim: n,
        b_dim: b.dim(),
        center_dim: center.dim(),
        summands,
        kernel_dim: kernel.len(),
        kernel_basis: kernel.clone(),
        assertions: checks.0.clone(),
    };
    checks.ensure()?;
    Ok(Decomposition { algebra: h, module, classes, ideals, flags, kernel, report })
}

/// `z_b(a)`, an echelon complement `b_r` of it in `b`, and `g_r = [g, g] + b_r`.
#[derive(Clone, Debug)]
pub struct GrSplit {
    pub z_b_a: Subspace,
    pub b_r: Subspace,
    pub g_r: Subspace,
    pub checks: Checks,
}

pub fn gr_split(d: &Decomposition) -> GrSplit {
    let g = &d.algebra;
    let n = g.dim();
    let b = &d.module.b;
    let z_b_a = g.centralizer(&d.module.a, b);
    let mut b_r = Subspace::zero(n);
    let mut acc = z_b_a.clone();
    for v in b.basis() {
        if !acc.contains(v) {
            let line = Subspace::span(n, std::slice::from_ref(v));
            acc = acc.sum(&line);
            b_r = b_r.sum(&line);
        }
    }
    let g_r = g.derived().sum(&b_r);
    let z0 = g.center().homogeneous_part(g, Parity::Even);
    let mut checks = Checks::default();
    checks.record("g_r is an ideal", g.is_ideal(&g_r));
    checks.record("g_r + z_b(a) = g", g_r.sum(&z_b_a).dim() == n);
    checks.record("g_r ∩ z_b(a) in z(g)_0", z0.contains_space(&g_r.intersection(&z_b_a)));
    checks.record("[z_b(a), g] in z(g)_0", z0.contains_space(&g.bracket_span(&z_b_a, &g.whole())));
    GrSplit { z_b_a, b_r, g_r, checks }
}
