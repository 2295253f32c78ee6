//! The five necessary conditions for unitarity, each with a verdict and the
//! certificate behind it.

use serde::Serialize;
use serde_json::{json, Value};

use super::cone::{cone_from_witness, find_null_odd, ConeCertificate};
use super::witness::{compactness_check, find_witness, invariant_functional_basis, WitnessOutcome};
use crate::algebra::SuperAlgebra;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    /// (i) `g` is compact.
    Compact,
    /// (ii) `[X, X] ≠ 0` for odd `X ≠ 0`.
    NonzeroSquares,
    /// (iii) the cone of odd squares is pointed.
    PointedCone,
    /// (iv) some `κ_ω` is positive definite.
    PositiveWitness,
    /// (v) `z(g₀) ≠ 0`, seen through functionals vanishing on `[g₀, g₀]`.
    EvenCenter,
}

impl Condition {
    pub fn item(self) -> &'static str {
        match self {
            Condition::Compact => "i",
            Condition::NonzeroSquares => "ii",
            Condition::PointedCone => "iii",
            Condition::PositiveWitness => "iv",
            Condition::EvenCenter => "v",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionReport {
    pub item: &'static str,
    pub condition: Condition,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct UnitarityReport {
    pub algebra: String,
    pub seed: u64,
    pub items: Vec<ConditionReport>,
    pub overall: String,
}

pub const OBSTRUCTION: &str = "obstruction found";
pub const ALL_PASS: &str = "all necessary conditions pass";
pub const INCONCLUSIVE: &str = "inconclusive items listed";

impl UnitarityReport {
    pub fn item(&self, c: Condition) -> &ConditionReport {
        self.items.iter().find(|r| r.condition == c).expect("all five items are present")
    }

    pub fn failed(&self) -> Vec<Condition> {
        self.items.iter().filter(|r| r.verdict == Verdict::Fail).map(|r| r.condition).collect()
    }
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("report values serialize")
}

pub fn unitarity_report(g: &SuperAlgebra, seed: u64) -> UnitarityReport {
    let mut items = Vec::new();
    let mut push = |condition: Condition, verdict: Verdict, certificate: Option<Value>| {
        items.push(ConditionReport { item: condition.item(), condition, verdict, certificate });
    };

    let compact = compactness_check(g);
    let v = if compact.is_compact() {
        Verdict::Pass
    } else if compact.is_not_compact() {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    };
    push(Condition::Compact, v, Some(to_value(&compact)));

    let witness = find_witness(g);
    match &witness {
        WitnessOutcome::Found(_) => push(Condition::NonzeroSquares, Verdict::Pass, Some(json!({"by": "witness"}))),
        _ if g.d1() == 0 => push(Condition::NonzeroSquares, Verdict::Pass, Some(json!({"by": "no odd part"}))),
        _ => match find_null_odd(g, seed) {
            Some(x) => push(
                Condition::NonzeroSquares,
                Verdict::Fail,
                Some(json!({"null_odd_vector": x.iter().map(|c| c.to_string()).collect::<Vec<_>>()})),
            ),
            None => push(Condition::NonzeroSquares, Verdict::Inconclusive, None),
        },
    }

    let cone = cone_from_witness(g, &witness, seed);
    let v = match &cone {
        c if c.is_pointed() => Verdict::Pass,
        ConeCertificate::NotPointed { .. } => Verdict::Fail,
        _ => Verdict::Inconclusive,
    };
    push(Condition::PointedCone, v, Some(to_value(&cone)));

    let v = match &witness {
        WitnessOutcome::Found(_) => Verdict::Pass,
        WitnessOutcome::NoWitness { .. } => Verdict::Fail,
        WitnessOutcome::Inconclusive { .. } => Verdict::Inconclusive,
    };
    push(Condition::PositiveWitness, v, Some(to_value(&witness)));

    let functionals = invariant_functional_basis(g);
    let v = if functionals.is_empty() { Verdict::Fail } else { Verdict::Pass };
    push(Condition::EvenCenter, v, Some(json!({"functional_space_dim": functionals.len()})));

    let overall = if items.iter().any(|r| r.verdict == Verdict::Fail) {
        OBSTRUCTION
    } else if items.iter().all(|r| r.verdict == Verdict::Pass) {
        ALL_PASS
    } else {
        INCONCLUSIVE
    };
    UnitarityReport { algebra: g.name().to_string(), seed, items, overall: overall.to_string() }
}
