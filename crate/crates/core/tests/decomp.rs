use proptest::prelude::*;

use superlie::algebra::combinators::direct_sum_all;
use superlie::decomp::ideals::IdealKind;
use superlie::decomp::{compute_b, gr_split, inputs, reduce_to_odd_generated, structure_report, Decomposition};
use superlie::families::abstract_algebras::{tangent, tangent_tilde};
use superlie::families::{build, FamilySpec, KTag};
use superlie::unitar::fingerprint;
use superlie::{Error, SuperAlgebra};

fn fam(spec: FamilySpec) -> SuperAlgebra {
    build(spec).unwrap().algebra
}

fn run(g: &SuperAlgebra) -> Decomposition {
    let d = structure_report(g, 1).unwrap_or_else(|e| panic!("{}: {e}", g.name()));
    assert!(d.report.assertions.iter().all(|a| a.holds));
    d
}

fn ideal_fingerprints(d: &Decomposition) -> Vec<superlie::unitar::Fingerprint> {
    d.ideals.iter().map(|i| i.fingerprint.clone()).collect()
}

#[test]
fn b_dimensions() {
    assert_eq!(compute_b(&fam(FamilySpec::THat(KTag::Su(2)))).unwrap().dim(), 1);
    assert_eq!(compute_b(&fam(FamilySpec::Su { n: 2, m: 2 })).unwrap().dim(), 0);
    assert!(compute_b(&fam(FamilySpec::U { p: 1, q: 1 })).is_err());
}

#[test]
fn reduction_of_u11() {
    let r = reduce_to_odd_generated(&fam(FamilySpec::U { p: 1, q: 1 })).unwrap();
    assert_eq!((r.h.dim(), r.c.dim()), (3, 1));
}

#[test]
fn su21_with_tangent_ideals() {
    let g = inputs::su21_with_tangents().unwrap();
    let d = run(&g);
    assert_eq!((d.js_count(), d.ja_count(), d.report.b_dim, d.kernel.len()), (1, 2, 1, 0));
    let k = KTag::Su(2).build().unwrap();
    let mut want = vec![
        fingerprint(&fam(FamilySpec::Su { n: 2, m: 1 })),
        fingerprint(&tangent(&k).unwrap()),
        fingerprint(&tangent_tilde(&k).unwrap()),
    ];
    let mut got = ideal_fingerprints(&d);
    want.sort_by_key(|f| (f.d0, f.d1));
    got.sort_by_key(|f| (f.d0, f.d1));
    assert_eq!(got, want);
    let su = d.report.summands.iter().find(|s| s.kind == "Js").unwrap();
    assert_eq!(su.pair, Some(su.index));
    assert_eq!(su.structure_flags.direct_summand, Some(true));
    let split = gr_split(&d);
    assert!(split.z_b_a.is_zero());
    assert_eq!(split.g_r.dim(), d.algebra.dim());
    assert!(split.checks.0.iter().all(|a| a.holds));
}

#[test]
fn glued_centers_give_central_kernel() {
    let d = run(&inputs::glued_su22_q2().unwrap());
    assert_eq!((d.js_count(), d.ja_count(), d.ideals.len(), d.kernel.len()), (3, 0, 2, 1));
    let mut got = ideal_fingerprints(&d);
    got.sort_by_key(|f| (f.d0, f.d1));
    assert_eq!(got, [fingerprint(&fam(FamilySpec::Su { n: 2, m: 2 })), fingerprint(&fam(FamilySpec::Q { n: 2 }))]);
}

#[test]
fn su22_odd_module_splits_into_a_pair() {
    // over the rationals su(2|2)₁ is two copies of the real 4-dimensional
    // module; the two copies are each other's partners
    let d = run(&fam(FamilySpec::Su { n: 2, m: 2 }));
    assert_eq!(d.classes.pairing, [Some(1), Some(0)]);
    assert_eq!(d.ideals.len(), 1);
    assert_eq!(d.ideals[0].space.dim(), d.algebra.dim());
    assert_eq!(d.report.summands[0].structure_flags.b_commutes, Some(true));
}

#[test]
fn q2_alone() {
    let d = run(&fam(FamilySpec::Q { n: 2 }));
    assert_eq!((d.js_count(), d.ja_count(), d.kernel.len()), (1, 0, 0));
    assert_eq!(d.classes.pairing, [Some(0)]);
    assert_eq!(ideal_fingerprints(&d), [fingerprint(&fam(FamilySpec::Q { n: 2 }))]);
}

#[test]
fn hat_tangent_has_one_abelian_index() {
    let g = fam(FamilySpec::THat(KTag::Su(2)));
    let d = run(&g);
    assert_eq!((d.js_count(), d.ja_count(), d.report.b_dim), (0, 1, 1));
    assert!(matches!(d.ideals[0].kind, IdealKind::C { k: 0 }));
    let k = KTag::Su(2).build().unwrap();
    assert_eq!(d.ideals[0].fingerprint, fingerprint(&tangent(&k).unwrap()));
}

#[test]
fn su22_with_spin_hat_is_reduced() {
    let d = run(&inputs::su22_with_spin_hat().unwrap());
    assert!(d.report.reduced_to_odd_generated);
    assert_eq!((d.js_count(), d.ja_count(), d.report.b_dim, d.kernel.len()), (2, 0, 4, 0));
    assert_eq!(ideal_fingerprints(&d), [fingerprint(&fam(FamilySpec::Su { n: 2, m: 2 }))]);
    let split = gr_split(&d);
    assert_eq!(split.z_b_a.dim(), 4);
    assert!(split.checks.0.iter().all(|a| a.holds));
}

#[test]
fn q_hat_embedding_flag() {
    let d = run(&fam(FamilySpec::QHat { n: 2 }));
    assert_eq!(d.report.b_dim, 1);
    assert_eq!(d.report.summands[0].structure_flags.q_hat_embedding, Some(true));
}

#[test]
fn even_only_rejected() {
    let k = KTag::Su(3).build().unwrap();
    match structure_report(&k, 1) {
        Err(Error::Precondition(m)) => assert!(m.contains("odd-generation precondition")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn reports_are_deterministic() {
    let g = inputs::glued_su22_q2().unwrap();
    let a = serde_json::to_string(&structure_report(&g, 9).unwrap().report).unwrap();
    let b = serde_json::to_string(&structure_report(&g, 9).unwrap().report).unwrap();
    assert_eq!(a, b);
}

fn part(i: u8) -> SuperAlgebra {
    match i {
        0 => fam(FamilySpec::Su { n: 2, m: 1 }),
        1 => fam(FamilySpec::Q { n: 2 }),
        2 => fam(FamilySpec::THat(KTag::Su(2))),
        _ => fam(FamilySpec::Psu { n: 2 }),
    }
}

/// `(|J_s|, |J_a|, ideals)` of each part, worked out by hand.
fn counts(i: u8) -> (usize, usize, usize) {
    match i {
        0 => (1, 0, 1),
        1 => (1, 0, 1),
        2 => (0, 1, 1),
        _ => (2, 0, 1),
    }
}

/// The ideal each part contributes: `T̂k` contributes `c = Tk`.
fn ideal_model(i: u8) -> superlie::unitar::Fingerprint {
    match i {
        2 => fingerprint(&tangent(&KTag::Su(2).build().unwrap()).unwrap()),
        _ => fingerprint(&part(i)),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]
    #[test]
    fn direct_sums_add_up(parts in proptest::collection::vec(0u8..4, 1..3)) {
        let algs: Vec<_> = parts.iter().map(|&i| part(i)).collect();
        let (g, _) = direct_sum_all(&algs);
        let d = run(&g);
        let want = parts.iter().fold((0, 0, 0), |acc, &i| {
            let c = counts(i);
            (acc.0 + c.0, acc.1 + c.1, acc.2 + c.2)
        });
        prop_assert_eq!((d.js_count(), d.ja_count(), d.ideals.len()), want);
        prop_assert_eq!(d.kernel.len(), 0);
        let mut got = ideal_fingerprints(&d);
        let mut expect: Vec<_> = parts.iter().map(|&i| ideal_model(i)).collect();
        got.sort_by_key(|f| (f.d0, f.d1, f.center_dim));
        expect.sort_by_key(|f| (f.d0, f.d1, f.center_dim));
        prop_assert_eq!(got, expect);
    }
}
