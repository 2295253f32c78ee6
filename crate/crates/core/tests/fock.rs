use num_traits::{One, Zero};
use proptest::prelude::*;

use superlie::exact::{rat, CMatrix, Rational, Scalar};
use superlie::families::{build, FamilySpec, KTag};
use superlie::fock::rep::Violation;
use superlie::fock::spin::number_operator;
use superlie::fock::*;

fn binomial(n: usize, k: usize) -> usize {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

#[test]
fn spin_representations_are_unitary_and_faithful() {
    for n in 1..=3 {
        for variant in [SpinVariant::H, SpinVariant::HHat] {
            let (g, rho) = spin_representation(n, variant).unwrap();
            assert_eq!(rho.dim(), 1 << n);
            let c = check_unitary_representation(&g, &rho);
            assert!(c.ok() && c.faithful, "{}: {c:?}", g.name());
        }
    }
}

#[test]
fn number_operator_spectrum() {
    let (_, rho) = spin_representation(3, SpinVariant::HHat).unwrap();
    let spec = number_spectrum(&rho.operators[1]).unwrap();
    let want: Vec<(Rational, usize)> = (0..=3).map(|k| (rat(k as i64), binomial(3, k))).collect();
    assert_eq!(spec, want);
    // −iρ(d) acts as k on Λᵏ
    let fs = FockSpace::new(4);
    let n = number_operator(&fs).scale(&-Scalar::i());
    for m in 0..fs.dim() {
        let mut e = vec![Scalar::zero(); fs.dim()];
        e[m] = Scalar::one();
        let image = n.mul_vec(&e);
        let k = Scalar::from_int(m.count_ones() as i64);
        assert_eq!(image, e.iter().map(|x| x * &k).collect::<Vec<_>>());
    }
}

#[test]
fn tilde_tangent_su2() {
    let (g, rho) = tilde_tangent_representation(KTag::Su(2)).unwrap();
    assert_eq!((g.dim(), rho.dim()), (7, 8));
    let c = check_unitary_representation(&g, &rho);
    assert!(c.ok() && c.faithful, "{c:?}");
    assert_eq!(c.checks, 28 + 7 * 64);
}

#[test]
fn tilde_tangent_su3() {
    let (g, rho) = tilde_tangent_representation(KTag::Su(3)).unwrap();
    let c = check_unitary_representation(&g, &rho);
    assert!(c.ok() && c.faithful, "{c:?}");
}

#[test]
fn defining_representations() {
    for spec in [FamilySpec::U { p: 1, q: 1 }, FamilySpec::U { p: 2, q: 1 }, FamilySpec::Su { n: 2, m: 1 }] {
        let built = build(spec).unwrap();
        let rho = Representation::defining(&built).unwrap();
        let c = check_unitary_representation(&built.algebra, &rho);
        assert!(c.ok() && c.faithful, "{spec}: {c:?}");
    }
}

#[test]
fn trivial_representation_is_not_faithful() {
    let g = build(FamilySpec::Psu { n: 2 }).unwrap().algebra;
    let c = check_unitary_representation(&g, &Representation::trivial(&g));
    assert!(c.ok());
    assert!(!c.faithful);
    assert_eq!(c.kernel_dim, g.dim());
}

#[test]
fn perturbations_are_caught() {
    let (g, mut rho) = spin_representation(2, SpinVariant::H).unwrap();
    rho.operators[0] = CMatrix::identity(rho.dim()).scale(&Scalar::gauss(0, 2));
    let c = check_unitary_representation(&g, &rho);
    assert!(matches!(c.violation, Some(Violation::Homomorphism { .. })), "{c:?}");

    // conjugating by a non-unitary diagonal keeps the homomorphism only
    let (g, mut rho) = spin_representation(1, SpinVariant::H).unwrap();
    let s = CMatrix::diag(&[Scalar::one(), Scalar::from_int(2)]);
    let s_inv = CMatrix::diag(&[Scalar::one(), Scalar::real(superlie::exact::ratio(1, 2))]);
    for m in rho.operators.iter_mut() {
        *m = &(&s * m) * &s_inv;
    }
    let c = check_unitary_representation(&g, &rho);
    assert!(c.homomorphism);
    assert!(matches!(c.violation, Some(Violation::Unitarity { .. })), "{c:?}");
}

#[test]
fn export_shape() {
    let (_, rho) = spin_representation(1, SpinVariant::H).unwrap();
    let v = serde_json::to_value(rho.export()).unwrap();
    assert_eq!(v["space"]["dim"], 2);
    assert_eq!(v["gram_identity"], true);
    assert_eq!(v["operators"].as_array().unwrap().len(), 3);
    assert_eq!(v["operators"][0]["matrix"][0][0], "1i");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn square_of_odd_element(coeffs in proptest::collection::vec(-3i64..=3, 4)) {
        let (g, rho) = spin_representation(2, SpinVariant::H).unwrap();
        let mut x = vec![Rational::zero(); g.dim()];
        for (k, c) in coeffs.iter().enumerate() {
            x[1 + k] = rat(*c);
        }
        let r = rho.image(&x);
        let lhs = rho.image(&g.bracket(&x, &x).unwrap());
        prop_assert_eq!(lhs, &(&r * &r) + &(&r * &r));
    }
}
