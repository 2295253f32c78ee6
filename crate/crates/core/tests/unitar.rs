use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superlie::algebra::combinators::central_extension;
use superlie::algebra::forms::killing_restricted;
use superlie::exact::{rat, vec_ops, Rational};
use superlie::families::{build, matrix, FamilySpec, KTag};
use superlie::unitar::report::{ALL_PASS, OBSTRUCTION};
use superlie::unitar::*;
use superlie::SuperAlgebra;

fn fam(tag: &str, params: &str) -> SuperAlgebra {
    build(FamilySpec::parse(tag, params).unwrap()).unwrap().algebra
}

fn random_odd(rng: &mut ChaCha8Rng, d1: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..d1).map(|_| rat(rng.gen_range(-4..=4))).collect();
        if !vec_ops::is_zero(&v) {
            return v;
        }
    }
}

/// `ω([X, X])` through the full bracket of the algebra, bypassing the Gram.
fn omega_on_square(g: &SuperAlgebra, omega: &[Rational], x_odd: &[Rational]) -> Rational {
    let mut x = vec_ops::zero(g.d0());
    x.extend_from_slice(x_odd);
    let sq = g.bracket(&x, &x).unwrap();
    assert!(sq[g.d0()..].iter().all(Zero::is_zero));
    vec_ops::dot(&sq[..g.d0()], omega)
}

#[test]
fn functional_space_dimensions() {
    assert_eq!(invariant_functional_basis(&fam("psu", "2")).len(), 0);
    assert_eq!(invariant_functional_basis(&fam("su", "2,1")).len(), 1);
    assert_eq!(invariant_functional_basis(&fam("u", "1,1")).len(), 2);
}

#[test]
fn witnesses_reverify_and_scale() {
    for (t, p) in [("u", "2,1"), ("su", "2,1"), ("su", "2,2"), ("q", "2"), ("c", "2"), ("u", "2,2")] {
        let g = fam(t, p);
        let WitnessOutcome::Found(w) = find_witness(&g) else { panic!("{t}({p}) has no witness") };
        assert!(w.verify(&g), "{t}({p})");
        assert!(w.lp_iterations <= 200);
        let w2 = w.scaled(&g, &rat(2)).expect("2ω is a witness");
        assert!(w2.verify(&g));
    }
}

#[test]
fn witness_positive_on_random_squares_in_u() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (p, q) in [(1, 1), (2, 1), (3, 1), (2, 2)] {
        let g = fam("u", &format!("{p},{q}"));
        let w = find_witness(&g).witness().cloned().expect("u(p|q) has a witness");
        for _ in 0..100 {
            let x = random_odd(&mut rng, g.d1());
            assert!(omega_on_square(&g, &w.functional, &x).is_positive());
        }
    }
}

#[test]
fn no_witness_without_even_center() {
    match find_witness(&fam("pq", "2")) {
        WitnessOutcome::NoWitness { reason, .. } => assert_eq!(reason, witness::TRIVIAL_EVEN_CENTER),
        other => panic!("{other:?}"),
    }
}

#[test]
fn cone_certificates() {
    let seed = DEFAULT_SEED;
    let g = fam("ch_indefinite", "1,1");
    let c = cone_pointedness(&g, seed);
    assert!(matches!(c, ConeCertificate::NotPointed { .. }), "{c:?}");
    assert!(c.verify(&g));
    if let ConeCertificate::NotPointed { x1, x2, .. } = &c {
        let (q1, q2) = (odd_square(&g, x1), odd_square(&g, x2));
        assert!(!vec_ops::is_zero(&q1) && !vec_ops::is_zero(&q2));
        assert!(vec_ops::is_zero(&vec_ops::add(&q1, &q2)));
    }

    let u22 = fam("u", "2,2");
    let c = cone_pointedness(&u22, seed);
    assert!(matches!(c, ConeCertificate::Pointed { .. }) && c.verify(&u22));

    let k = KTag::Su(2).build().unwrap();
    let t = superlie::families::abstract_algebras::tangent(&k).unwrap();
    let beta = killing_restricted(&k, superlie::Parity::Even).scale(&rat(-1));
    let ext = central_extension(&t, &beta, "c").unwrap();
    let c = cone_pointedness(&ext, seed);
    assert!(matches!(c, ConeCertificate::Pointed { .. }) && c.verify(&ext), "{c:?}");
}

#[test]
fn compactness() {
    assert!(compactness_check(&fam("su", "2,2")).is_compact());
    assert!(compactness_check(&fam("T", "su2")).is_compact());
    let (sl2c, _) = matrix::sl2c_realified().unwrap();
    let c = compactness_check(&sl2c);
    assert!(c.is_not_compact(), "{c:?}");
}

#[test]
fn obstruction_reports() {
    let seed = DEFAULT_SEED;
    for (t, p) in [("psu", "2"), ("pq", "2")] {
        let r = unitarity_report(&fam(t, p), seed);
        assert_eq!(r.overall, OBSTRUCTION);
        assert_eq!(r.item(Condition::EvenCenter).verdict, Verdict::Fail);
    }
    let r = unitarity_report(&fam("T", "su2"), seed);
    assert_eq!(r.overall, OBSTRUCTION);
    assert_eq!(r.item(Condition::NonzeroSquares).verdict, Verdict::Fail);
    let r = unitarity_report(&fam("ch_indefinite", "1,1"), seed);
    assert_eq!(r.item(Condition::PointedCone).verdict, Verdict::Fail);
    for (t, p) in [("u", "2,1"), ("su", "2,1"), ("su", "2,2"), ("q", "2"), ("c", "2"), ("su", "3,1")] {
        let r = unitarity_report(&fam(t, p), seed);
        assert_eq!(r.overall, ALL_PASS, "{t}({p}): {r:#?}");
    }
}

#[test]
fn fingerprints_and_classification() {
    let psu = fam("psu", "2");
    let fp = fingerprint(&psu);
    assert_eq!((fp.d0, fp.d1, fp.center_dim, fp.even_center_dim, fp.killing_rank), (6, 8, 0, 0, 0));
    assert_eq!(classify_fingerprint(&psu).kinds(), ["psu(n|n)"]);
    assert_eq!(classify_fingerprint(&fam("q", "2")).kinds(), ["q(n)"]);
    let c2 = classify_fingerprint(&fam("c", "2"));
    assert!(c2.kinds().iter().any(|k| k == "c(n)"), "{c2:?}");
    let u = classify_fingerprint(&fam("u", "2,1"));
    assert!(matches!(u, Classification::Unknown { .. }), "{u:?}");
}

#[test]
fn classify_round_trips_on_family_members() {
    let specs = [
        ("su", "2,1"),
        ("su", "3,1"),
        ("su", "2,2"),
        ("su", "3,3"),
        ("psu", "2"),
        ("psu", "3"),
        ("q", "2"),
        ("q", "3"),
        ("pq", "2"),
        ("pq", "3"),
        ("c", "2"),
        ("c", "3"),
        ("spin_h", "1"),
        ("spin_h", "2"),
        ("T", "su2"),
        ("T", "su3"),
        ("T_hat", "su2"),
        ("T_hat", "so5"),
        ("T_tilde", "su2"),
        ("T_tilde", "sp2"),
    ];
    for (t, p) in specs {
        let spec = FamilySpec::parse(t, p).unwrap();
        let kind = superlie::unitar::fingerprint::kind(&spec).unwrap();
        let c = classify_fingerprint(&build(spec).unwrap().algebra);
        assert!(c.kinds().iter().any(|k| k == kind), "{spec}: {c:?}");
    }
}
