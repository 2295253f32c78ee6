//! Decomposition of reductive Lie superalgebras: the subspace `b`, simple
//! summands `a_j` of `[g₀, g₁]`, the index classes `J_s`/`J_a`, the ideals
//! `g(j)` and `c(k)`, and the structure report.

pub mod ideals;
pub mod inputs;
pub mod reduce;
pub mod report;
pub mod split;

use serde::Serialize;

use crate::algebra::module::restricted_action;
use crate::algebra::{CoordinateBasis, Subspace, SuperAlgebra};
use crate::{Error, Result};

pub use ideals::{build_ideals, Ideal, IdealKind};
pub use reduce::{compute_b, is_odd_generated, reduce_to_odd_generated, OddGenerated};
pub use report::{gr_split, structure_report, Decomposition, DecompositionReport, GrSplit};
pub use split::{split_module, Simplicity};

/// A named exact check and its outcome.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Assertion {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Default)]
pub struct Checks(pub Vec<Assertion>);

impl Checks {
    pub fn record(&mut self, name: impl Into<String>, holds: bool) -> bool {
        self.0.push(Assertion { name: name.into(), holds });
        holds
    }

    /// Fails with the names of all failed checks.
    pub fn ensure(&self) -> Result<()> {
        let failed: Vec<&str> = self.0.iter().filter(|a| !a.holds).map(|a| a.name.as_str()).collect();
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Error::Defect(format!("failed: {}", failed.join("; "))))
        }
    }
}

pub fn same_space(a: &Subspace, b: &Subspace) -> bool {
    a.dim() == b.dim() && a.contains_space(b)
}

#[derive(Clone, Debug)]
pub struct Summand {
    pub space: Subspace,
    pub commutant_dim: usize,
    pub certificate: Simplicity,
}

#[derive(Clone, Debug)]
pub struct ModuleDecomposition {
    pub b: Subspace,
    pub a: Subspace,
    pub summands: Vec<Summand>,
}

/// `g₁ = b ⊕ a` with `a = [g₀, g₁]` split into simple `g₀`-modules, ordered
/// by dimension and then by echelon basis.
pub fn decompose_odd(g: &SuperAlgebra, b: &Subspace, seed: u64) -> Result<ModuleDecomposition> {
    let n = g.dim();
    let g0 = g.even_part();
    let g1 = g.odd_part();
    let a = g.bracket_span(&g0, &g1);
    if !b.intersection(&a).is_zero() || b.sum(&a).dim() != g1.dim() {
        return Err(Error::Precondition("g1 != b (+) [g0, g1]; odd module is not semisimple".into()));
    }
    let mut summands = Vec::new();
    if !a.is_zero() {
        let basis = CoordinateBasis::new(n, a.basis().to_vec())?;
        let acting: Vec<_> = g.space().even_indices().map(|i| g.unit(i)).collect();
        let actions = restricted_action(g, &acting, &basis)?;
        for s in split_module(&actions, basis.len(), seed)? {
            let vs: Vec<_> = s.basis.iter().map(|c| basis.combine(c)).collect();
            summands.push(Summand {
                space: Subspace::span(n, &vs),
                commutant_dim: s.commutant_dim,
                certificate: s.certificate,
            });
        }
    }
    summands.sort_by(|x, y| x.space.dim().cmp(&y.space.dim()).then_with(|| x.space.basis().cmp(y.space.basis())));
    Ok(ModuleDecomposition { b: b.clone(), a, summands })
}

/// `J_s` as pairs `(k, k′)` and `J_a`, with the side conditions checked.
#[derive(Clone, Debug)]
pub struct IndexClasses {
    pub pairing: Vec<Option<usize>>,
    pub checks: Checks,
}

impl IndexClasses {
    pub fn js(&self) -> Vec<usize> {
        (0..self.pairing.len()).filter(|&k| self.pairing[k].is_some()).collect()
    }

    pub fn ja(&self) -> Vec<usize> {
        (0..self.pairing.len()).filter(|&k| self.pairing[k].is_none()).collect()
    }

    pub fn partner(&self, k: usize) -> Option<usize> {
        self.pairing[k]
    }
}

pub fn classify_indices(g: &SuperAlgebra, dec: &ModuleDecomposition) -> Result<IndexClasses> {
    let a: Vec<&Subspace> = dec.summands.iter().map(|s| &s.space).collect();
    let m = a.len();
    let b = &dec.b;
    let mut checks = Checks::default();
    let brackets: Vec<Vec<Subspace>> = (0..m).map(|k| (0..m).map(|j| g.bracket_span(a[k], a[j])).collect()).collect();
    let triple = |k: usize, j: usize| g.bracket_span(&brackets[k][j], a[k]);
    let mut pairing = vec![None; m];
    for k in 0..m {
        let full: Vec<usize> = (0..m).filter(|&j| same_space(&triple(k, j), a[k])).collect();
        match full.len() {
            0 => {
                let ba = g.bracket_span(b, a[k]);
                checks.record(format!("J_a {k}: [[b,a_k],a_k] = a_k"), same_space(&g.bracket_span(&ba, a[k]), a[k]));
                checks
                    .record(format!("J_a {k}: [[a_k,a_j],a_k] = 0 for all j"), (0..m).all(|j| triple(k, j).is_zero()));
            }
            1 => pairing[k] = Some(full[0]),
            _ => {
                return Err(Error::Defect(format!("index {k} has several partners {full:?}")));
            }
        }
    }
    for k in 0..m {
        if let Some(kp) = pairing[k] {
            checks.record(format!("J_s {k}: partner {kp} is in J_s with partner {k}"), pairing[kp] == Some(k));
            checks.record(format!("J_s {k}: a_k' = [[a_k',a_k],a_k']"), same_space(&triple(kp, k), a[kp]));
        }
    }
    let center = g.center();
    let g0 = g.even_part();
    let g0g0 = g.bracket_span(&g0, &g0);
    for k in 0..m {
        match pairing[k] {
            None => {
                checks.record(format!("[a_{k},a_{k}] central"), center.contains_space(&brackets[k][k]));
                for s in (0..m).filter(|&s| s != k) {
                    checks.record(format!("[a_{k},a_{s}] = 0"), brackets[k][s].is_zero());
                }
            }
            Some(kp) => {
                let target = brackets[k][kp].intersection(&g0g0);
                checks.record(
                    format!("[b,a_{k}] in [a_{k},a_{kp}] ∩ [g0,g0]"),
                    target.contains_space(&g.bracket_span(b, a[k])),
                );
                for s in (0..m).filter(|&s| s != k && s != kp) {
                    checks.record(format!("[a_{k},a_{s}] = 0"), brackets[k][s].is_zero());
                }
            }
        }
    }
    Ok(IndexClasses { pairing, checks })
}
