//! One line per acceptance criterion; exits nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superlie::algebra::combinators::{central_extension, is_trivial_cocycle, quotient_by_central};
use superlie::algebra::forms::invariant_forms;
use superlie::algebra::serial::to_json;
use superlie::algebra::Subspace;
use superlie::decomp::{compute_b, inputs, structure_report, Decomposition};
use superlie::exact::{rank, rat, solve, vec_ops, QMatrix, Rational};
use superlie::families::abstract_algebras::{tangent, tangent_hat, tangent_tilde};
use superlie::families::square::square_identity;
use superlie::families::{build, matrix, FamilySpec, KTag};
use superlie::fock::{check_car, check_unitary_representation, number_spectrum, spin_representation};
use superlie::fock::{tilde_tangent_representation, FockSpace, SpinVariant};
use superlie::unitar::report::{ALL_PASS, OBSTRUCTION};
use superlie::unitar::*;
use superlie::{Parity, SuperAlgebra};

const SEED: u64 = 20;

fn spec(tag: &str, params: &str) -> FamilySpec {
    FamilySpec::parse(tag, params).unwrap()
}

fn fam(tag: &str, params: &str) -> SuperAlgebra {
    build(spec(tag, params)).unwrap().algebra
}

fn su2() -> SuperAlgebra {
    KTag::Su(2).build().unwrap()
}

fn constructor_integrity() {
    // (tag, params, d₀, d₁) worked out from the defining matrix conditions
    let table = [
        ("u", "1,1", 2, 2),
        ("u", "2,1", 5, 4),
        ("su", "2,1", 4, 4),
        ("su", "2,2", 7, 8),
        ("psu", "2", 6, 8),
        ("psu", "3", 16, 18),
        ("q", "2", 9, 8),
        ("q", "1", 4, 3),
        ("pq", "2", 8, 8),
        ("pq", "1", 3, 3),
        ("q_hat", "2", 9, 9),
        ("q_hat", "1", 4, 4),
        ("c", "2", 4, 4),
        ("c", "3", 11, 8),
        ("T", "su2", 3, 3),
        ("T", "su3", 8, 8),
        ("T_hat", "su2", 3, 4),
        ("T_tilde", "su2", 4, 3),
        ("spin_h", "1", 1, 2),
        ("spin_h", "2", 1, 4),
        ("spin_h", "3", 1, 6),
        ("ch_indefinite", "1,1", 1, 2),
        ("ch_indefinite", "2,1", 1, 3),
    ];
    for (t, p, d0, d1) in table {
        let g = fam(t, p);
        g.verify().unwrap_or_else(|e| panic!("{t}({p}): {e}"));
        assert_eq!((g.d0(), g.d1()), (d0, d1), "{t}({p})");
    }
    // the tangent constructions agree with the abstract builders
    let k = su2();
    assert_eq!(tangent_hat(&k).unwrap().dim(), 7);
    assert_eq!(tangent_tilde(&k).unwrap().center().dim(), 1);
}

fn killing_dichotomy() {
    for (t, p) in [("psu", "2"), ("pq", "2")] {
        let g = fam(t, p);
        assert!(g.killing_form().is_zero(), "{t}({p})");
    }
    for (t, p) in [("su", "2,1"), ("c", "2")] {
        let g = fam(t, p);
        assert_eq!(rank(&g.killing_form()), g.dim(), "{t}({p})");
    }
}

fn square_identity_samples() {
    for (p, q) in [(1, 1), (2, 1), (2, 2)] {
        let built = build(FamilySpec::U { p, q }).unwrap();
        let real = built.realization.as_ref().unwrap();
        let r = square_identity(&built.algebra, real, 200, SEED).unwrap();
        assert_eq!((r.samples, r.satisfied, r.nonvanishing), (200, 200, 200), "u({p}|{q}): {r:?}");
    }
}

fn center_facts() {
    for (t, p, z0) in [("psu", "2", 0), ("pq", "2", 0), ("su", "2,1", 1), ("su", "3,1", 1), ("c", "2", 1)] {
        assert_eq!(fam(t, p).even_center().dim(), z0, "{t}({p})");
    }
    let built = build(spec("su", "2,2")).unwrap();
    let g = &built.algebra;
    let i1 = matrix::i_one(built.realization.as_ref().unwrap());
    let z = g.center();
    assert_eq!(z.dim(), 1);
    assert!(z.contains(&i1));
    assert!(g.derived().contains(&i1));
}

fn unitarity_reports() {
    for (t, p) in [("psu", "2"), ("pq", "2")] {
        let g = fam(t, p);
        let r = unitarity_report(&g, SEED);
        assert_eq!(r.overall, OBSTRUCTION);
        let item = r.item(Condition::EvenCenter);
        assert_eq!(item.verdict, Verdict::Fail);
        assert!(item.certificate.is_some());
        assert!(invariant_functional_basis(&g).is_empty());
    }

    let t = fam("T", "su2");
    let r = unitarity_report(&t, SEED);
    assert_eq!(r.overall, OBSTRUCTION);
    let ii = r.item(Condition::NonzeroSquares);
    let iii = r.item(Condition::PointedCone);
    assert!(ii.verdict == Verdict::Fail || iii.verdict == Verdict::Fail);
    if ii.verdict == Verdict::Fail {
        let cert = ii.certificate.as_ref().unwrap();
        let x: Vec<Rational> =
            cert["null_odd_vector"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().parse().unwrap()).collect();
        assert!(!vec_ops::is_zero(&x));
        assert!(vec_ops::is_zero(&odd_square(&t, &x)));
    }

    let ch = fam("ch_indefinite", "1,1");
    let r = unitarity_report(&ch, SEED);
    assert_eq!(r.overall, OBSTRUCTION);
    assert_eq!(r.item(Condition::PointedCone).verdict, Verdict::Fail);
    let cone = cone_pointedness(&ch, SEED);
    let ConeCertificate::NotPointed { x1, x2, .. } = &cone else { panic!("{cone:?}") };
    let (q1, q2) = (odd_square(&ch, x1), odd_square(&ch, x2));
    assert!(!vec_ops::is_zero(&q1));
    assert!(vec_ops::is_zero(&vec_ops::add(&q1, &q2)));

    for (t, p) in [("u", "2,1"), ("su", "2,1"), ("su", "2,2"), ("q", "2"), ("c", "2")] {
        let g = fam(t, p);
        let r = unitarity_report(&g, SEED);
        assert_eq!(r.overall, ALL_PASS, "{t}({p})");
        let WitnessOutcome::Found(w) = find_witness(&g) else { panic!("{t}({p}) has no witness") };
        assert!(w.lp_iterations <= 200);
        assert!(w.verify(&g));
        // independent re-check: ω vanishes on [g₀, g₀] and κ_ω is positive
        // on seeded odd samples
        for i in g.space().even_indices() {
            for j in g.space().even_indices() {
                assert!(vec_ops::dot(&g.basis_bracket(i, j)[..g.d0()], &w.functional).is_zero());
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        for _ in 0..50 {
            let mut x = vec![Rational::zero(); g.dim()];
            for k in g.space().odd_indices() {
                x[k] = rat(rng.gen_range(-3..=3));
            }
            if vec_ops::is_zero(&x) {
                continue;
            }
            let sq = g.bracket(&x, &x).unwrap();
            assert!(vec_ops::dot(&sq[..g.d0()], &w.functional).is_positive());
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn spin_representation_facts() {
    for n in 1..=5 {
        assert!(check_car(&FockSpace::new(n), SEED).unwrap().is_ok(), "n = {n}");
    }
    let (_, rho) = spin_representation(3, SpinVariant::HHat).unwrap();
    let want: Vec<(Rational, usize)> = (0..=3).map(|k| (rat(k as i64), binomial(3, k))).collect();
    assert_eq!(number_spectrum(&rho.operators[1]).unwrap(), want);
    for n in 1..=3 {
        let (g, rho) = spin_representation(n, SpinVariant::H).unwrap();
        let c = check_unitary_representation(&g, &rho);
        assert!(c.ok() && c.faithful, "spin_h({n}): {c:?}");
    }
    let (g, rho) = tilde_tangent_representation(KTag::Su(2)).unwrap();
    let c = check_unitary_representation(&g, &rho);
    assert!(c.ok() && c.faithful, "{c:?}");
}

fn run(g: &SuperAlgebra) -> Decomposition {
    let d = structure_report(g, SEED).unwrap_or_else(|e| panic!("{}: {e}", g.name()));
    assert!(d.report.assertions.iter().all(|a| a.holds), "{}", g.name());
    d
}

fn sorted(mut v: Vec<Fingerprint>) -> Vec<Fingerprint> {
    v.sort_by_key(|f| (f.d0, f.d1, f.center_dim, f.even_center_dim, f.killing_rank));
    v
}

/// Number of self-paired indices and of two-element pairs.
fn pairing_shape(d: &Decomposition) -> (usize, usize) {
    let p = &d.classes.pairing;
    let selfs = p.iter().enumerate().filter(|(i, j)| **j == Some(*i)).count();
    let pairs = p.iter().enumerate().filter(|(i, j)| matches!(j, Some(k) if k > i)).count();
    (selfs, pairs)
}

fn structure_round_trips() {
    let k = su2();
    let f = |g: &SuperAlgebra| fingerprint(g);
    let su21 = fam("su", "2,1");
    let su22 = fam("su", "2,2");
    let q2 = fam("q", "2");
    let tk = tangent(&k).unwrap();
    let tilde = tangent_tilde(&k).unwrap();

    // (input, |J_s|, |J_a|, (self-paired, pairs), ideals, kernel dim)
    let cases = [
        ("su21-tangents", 1, 2, (1, 0), vec![f(&su21), f(&tk), f(&tilde)], 0),
        ("glued-su22-q2", 3, 0, (1, 1), vec![f(&su22), f(&q2)], 1),
        ("q2", 1, 0, (1, 0), vec![f(&q2)], 0),
        ("hatTsu2", 0, 1, (0, 0), vec![f(&tk)], 0),
        ("su22-spin-hat", 2, 0, (0, 1), vec![f(&su22)], 0),
    ];
    for (name, js, ja, shape, ideals, kernel) in cases {
        let g = inputs::named(name).unwrap();
        let d = run(&g);
        assert_eq!((d.js_count(), d.ja_count()), (js, ja), "{name}");
        assert_eq!(pairing_shape(&d), shape, "{name}");
        assert_eq!(sorted(d.ideals.iter().map(|i| i.fingerprint.clone()).collect()), sorted(ideals), "{name}");
        assert_eq!(d.kernel.len(), kernel, "{name}");
        assert_eq!(d.report.kernel_dim, kernel, "{name}");
    }
}

/// `β` on the odd part of `psu(2|2)` read off from `su(2|2)`: the `i1`
/// component of brackets of lifted odd basis vectors, after removing an
/// even coboundary so that the even–even part vanishes.
fn su22_inducing_form() -> (SuperAlgebra, QMatrix) {
    let built = build(spec("su", "2,2")).unwrap();
    let g = &built.algebra;
    let i1 = matrix::i_one(built.realization.as_ref().unwrap());
    let q = quotient_by_central(g, &Subspace::span(g.dim(), std::slice::from_ref(&i1))).unwrap();
    let p = q.algebra.clone();
    let r = (0..g.dim()).find(|i| !q.keep.contains(i)).unwrap();
    let n = p.dim();
    // ω(a, b): coefficient of i1 in [ã, b̃] minus the lift of [a, b]
    let omega = |a: usize, b: usize| {
        let full = g.basis_bracket(q.keep[a], q.keep[b]);
        let low = p.basis_bracket(a, b);
        let mut rest = full.clone();
        for (k, c) in low.iter().enumerate() {
            if !c.is_zero() {
                rest[q.keep[k]] -= c;
            }
        }
        let lambda = &rest[r] / &i1[r];
        assert!(vec_ops::is_zero(&vec_ops::sub(&rest, &vec_ops::scale(&i1, &lambda))));
        lambda
    };
    // μ on [p₀, p₀] with μ([a, b]) = ω(a, b) on even pairs
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for a in 0..p.d0() {
        for b in 0..p.d0() {
            rows.push(p.basis_bracket(a, b));
            rhs.push(omega(a, b));
        }
    }
    let mu = solve(&QMatrix::from_rows(rows), &rhs).expect("even part is perfect").particular;
    let d0 = p.d0();
    let beta = QMatrix::from_fn(p.d1(), p.d1(), |a, b| {
        omega(d0 + a, d0 + b) - vec_ops::dot(&p.basis_bracket(d0 + a, d0 + b), &mu)
    });
    assert_eq!(n, 14);
    (p, beta)
}

fn central_extension_facts() {
    for (t, p) in [("su", "2,1"), ("c", "2")] {
        let g = fam(t, p);
        let forms = invariant_forms(&g, Parity::Odd);
        assert!(!forms.is_empty(), "{t}({p})");
        let mut combo = QMatrix::zeros(g.d1(), g.d1());
        for (s, beta) in forms.iter().enumerate() {
            combo = &combo + &beta.scale(&rat(s as i64 + 2));
        }
        for beta in forms.iter().chain([&combo]) {
            let lambda = is_trivial_cocycle(&g, beta).unwrap().unwrap_or_else(|| panic!("{t}({p}) nontrivial"));
            for i in 0..g.dim() {
                for j in 0..g.dim() {
                    let want = if i >= g.d0() && j >= g.d0() { beta[(i - g.d0(), j - g.d0())].clone() } else { rat(0) };
                    assert_eq!(vec_ops::dot(&g.basis_bracket(i, j), &lambda), want, "{t}({p}) at ({i}, {j})");
                }
            }
        }
    }
    let (psu, beta) = su22_inducing_form();
    assert!(is_trivial_cocycle(&psu, &beta).unwrap().is_none());
    let ext = central_extension(&psu, &beta, "c").unwrap();
    ext.verify().unwrap();
    assert_eq!(fingerprint(&ext), fingerprint(&fam("su", "2,2")));
}

fn structure_flags() {
    let d = run(&inputs::named("su21-tangents").unwrap());
    let su = fingerprint(&fam("su", "2,1"));
    let idx = d.ideals.iter().position(|i| i.fingerprint == su).expect("su(2|1) ideal");
    let summand = d.report.summands.iter().find(|s| d.ideal_of(s.index) == idx).unwrap();
    assert_eq!(summand.structure_flags.direct_summand, Some(true));

    let g = build(FamilySpec::QHat { n: 2 }).unwrap().algebra;
    let b = compute_b(&g).unwrap();
    assert_eq!(b.dim(), 1);
    let moves = g
        .space()
        .odd_indices()
        .any(|k| !vec_ops::is_zero(&g.bracket(&b.basis()[0], &vec_ops::unit(g.dim(), k)).unwrap()));
    assert!(moves, "[b, a] = 0");
    let d = run(&g);
    assert_eq!(d.report.summands[0].structure_flags.q_hat_embedding, Some(true));
}

fn determinism() {
    let glued = inputs::named("glued-su22-q2").unwrap();
    let a = serde_json::to_string(&structure_report(&glued, 7).unwrap().report).unwrap();
    let b = serde_json::to_string(&structure_report(&glued, 7).unwrap().report).unwrap();
    assert_eq!(a, b);
    let g = fam("su", "2,1");
    let a = serde_json::to_string(&unitarity_report(&g, 7)).unwrap();
    let b = serde_json::to_string(&unitarity_report(&g, 7)).unwrap();
    assert_eq!(a, b);

    let dir = tempfile::TempDir::new().unwrap();
    let file = dir.path().join("glued.json");
    std::fs::write(&file, to_json(&glued, None)).unwrap();
    for cmd in ["decompose", "unitarity"] {
        let out = || {
            let o = Command::new(env!("CARGO_BIN_EXE_superdecomp"))
                .args([cmd, file.to_str().unwrap(), "--seed", "7"])
                .output()
                .unwrap();
            assert!(o.status.success(), "{cmd}: {}", String::from_utf8_lossy(&o.stderr));
            o.stdout
        };
        assert_eq!(out(), out(), "{cmd}");
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 10] = [
        ("constructor integrity", constructor_integrity),
        ("killing dichotomy", killing_dichotomy),
        ("square identity", square_identity_samples),
        ("center facts", center_facts),
        ("unitarity obstructions and witnesses", unitarity_reports),
        ("spin representation", spin_representation_facts),
        ("structure round trips", structure_round_trips),
        ("central extensions", central_extension_facts),
        ("structure flags", structure_flags),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let ok = catch_unwind(AssertUnwindSafe(f)).is_ok();
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {}: {} ({:.1}s)",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
