//! Isomorphism-invariant summaries and matching against the families.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::Serialize;

use crate::algebra::module::odd_commutant_dim;
use crate::algebra::SuperAlgebra;
use crate::families::{build, FamilySpec, KTag};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub d0: usize,
    pub d1: usize,
    pub center_dim: usize,
    pub even_center_dim: usize,
    pub killing_rank: usize,
    pub odd_commutant_dim: usize,
    pub perfect: bool,
    /// `dim [g₁, g₁]`
    pub odd_bracket_dim: usize,
}

pub fn fingerprint(g: &SuperAlgebra) -> Fingerprint {
    Fingerprint {
        d0: g.d0(),
        d1: g.d1(),
        center_dim: g.center().dim(),
        even_center_dim: g.even_center().dim(),
        killing_rank: g.killing_rank(),
        odd_commutant_dim: odd_commutant_dim(g),
        perfect: g.is_perfect(),
        odd_bracket_dim: g.bracket_span(&g.odd_part(), &g.odd_part()).dim(),
    }
}

/// Fingerprint of a family member, computed once per process.
pub fn family_fingerprint(spec: FamilySpec) -> Option<Fingerprint> {
    static CACHE: OnceLock<Mutex<HashMap<FamilySpec, Option<Fingerprint>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(fp) = cache.lock().expect("cache lock").get(&spec) {
        return fp.clone();
    }
    let fp = build(spec).ok().map(|b| fingerprint(&b.algebra));
    cache.lock().expect("cache lock").insert(spec, fp.clone());
    fp
}

pub const DEFAULT_DIM_BOUND: usize = 64;

/// Family kind of a spec, for the families the classifier knows.
pub fn kind(spec: &FamilySpec) -> Option<&'static str> {
    Some(match spec {
        FamilySpec::Su { n, m } if n > m => "su(n|m)",
        FamilySpec::Su { .. } => "su(n|n)",
        FamilySpec::Psu { .. } => "psu(n|n)",
        FamilySpec::Q { .. } => "q(n)",
        FamilySpec::Pq { .. } => "pq(n)",
        FamilySpec::C { .. } => "c(n)",
        FamilySpec::T(_) => "Tk",
        FamilySpec::TTilde(_) => "T~k",
        FamilySpec::THat(_) => "T^k",
        FamilySpec::SpinH { .. } => "spin_h",
        _ => return None,
    })
}

/// Every classified family member with `d₀ + d₁ ≤ bound`.
pub fn family_table(bound: usize) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    let mut push = |s: FamilySpec| {
        let (a, b) = s.expected_dims();
        if a + b <= bound && s.validate().is_ok() {
            out.push(s);
        }
    };
    for n in 1..=bound {
        for m in 1..=n {
            push(FamilySpec::Su { n, m });
        }
        if n >= 2 {
            push(FamilySpec::Psu { n });
            push(FamilySpec::Q { n });
            push(FamilySpec::Pq { n });
            push(FamilySpec::C { n });
        }
        push(FamilySpec::SpinH { v: n });
        let ks = [KTag::Su(n), KTag::So(n), KTag::Sp(n)];
        for k in ks.into_iter().filter(|k| k.validate().is_ok() && 2 * k.dim() < bound) {
            push(FamilySpec::T(k));
            push(FamilySpec::THat(k));
            push(FamilySpec::TTilde(k));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Classification {
    /// All family members with this fingerprint; `kinds` lists their family
    /// kinds (several when families coincide, as for su(2|1) and c(2)).
    Match { kinds: Vec<String>, candidates: Vec<String> },
    /// No member matches; `nearest` lists members of the same dimensions.
    Unknown { nearest: Vec<String> },
}

impl Classification {
    pub fn kinds(&self) -> &[String] {
        match self {
            Classification::Match { kinds, .. } => kinds,
            Classification::Unknown { .. } => &[],
        }
    }
}

pub fn classify_fingerprint(g: &SuperAlgebra) -> Classification {
    classify_with_bound(g, DEFAULT_DIM_BOUND)
}

pub fn classify_with_bound(g: &SuperAlgebra, bound: usize) -> Classification {
    let fp = fingerprint(g);
    let mut kinds: Vec<String> = Vec::new();
    let mut candidates = Vec::new();
    let mut nearest = Vec::new();
    for spec in family_table(bound) {
        if spec.expected_dims() != (fp.d0, fp.d1) {
            continue;
        }
        let Some(candidate) = family_fingerprint(spec) else { continue };
        if candidate == fp {
            let k = kind(&spec).expect("table holds classified kinds").to_string();
            if !kinds.contains(&k) {
                kinds.push(k);
            }
            candidates.push(spec.to_string());
        } else {
            nearest.push(spec.to_string());
        }
    }
    if kinds.is_empty() {
        Classification::Unknown { nearest }
    } else {
        Classification::Match { kinds, candidates }
    }
}
