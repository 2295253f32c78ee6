//! The cone generated by odd squares `[X, X]`: pointedness certificates and
//! null odd vectors.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::ser;
use super::witness::{find_witness, Witness, WitnessOutcome};
use crate::algebra::SuperAlgebra;
use crate::exact::poly::rational_roots;
use crate::exact::{rat, vec_ops, Poly, Rational};

const RANDOM_SAMPLES: usize = 64;

/// `[u, v]` for odd `u, v` given in odd coordinates; the result lies in `g₀`
/// and is returned in even coordinates.
pub fn odd_bracket(g: &SuperAlgebra, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    let (d0, d1) = (g.d0(), g.d1());
    let mut out = vec_ops::zero(d0);
    for a in 0..d1 {
        if u[a].is_zero() {
            continue;
        }
        for b in 0..d1 {
            if v[b].is_zero() {
                continue;
            }
            let f = &u[a] * &v[b];
            g.for_each_term(d0 + a, d0 + b, |k, c| out[k] += c * &f);
        }
    }
    out
}

pub fn odd_square(g: &SuperAlgebra, x: &[Rational]) -> Vec<Rational> {
    odd_bracket(g, x, x)
}

fn odd_squares_vanish(g: &SuperAlgebra) -> bool {
    let d0 = g.d0();
    (d0..g.dim()).all(|a| (a..g.dim()).all(|b| g.basis_bracket(a, b).iter().all(Zero::is_zero)))
}

fn random_odd(rng: &mut ChaCha8Rng, d1: usize) -> Vec<Rational> {
    loop {
        let v: Vec<Rational> = (0..d1).map(|_| rat(rng.gen_range(-3..=3))).collect();
        if !vec_ops::is_zero(&v) {
            return v;
        }
    }
}

/// Structured candidates: basis vectors and `e_a ± e_b`, then seeded random
/// small integer vectors.
fn candidates(d1: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut out: Vec<Vec<Rational>> = (0..d1).map(|a| vec_ops::unit(d1, a)).collect();
    if d1 <= 16 {
        for a in 0..d1 {
            for b in a + 1..d1 {
                for s in [1, -1] {
                    let mut v = vec_ops::unit(d1, a);
                    v[b] = rat(s);
                    out.push(v);
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.extend((0..RANDOM_SAMPLES).map(|_| random_odd(&mut rng, d1)));
    out
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let sq = |n: &BigInt| {
        let s = n.sqrt();
        (&s * &s == *n).then_some(s)
    };
    Some(Rational::new(sq(r.numer())?, sq(r.denom())?))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum ConeCertificate {
    /// `ω` is strictly positive on every nonzero `[X, X]`.
    Pointed {
        witness: Witness,
    },
    /// Every odd square vanishes, so the cone is `{0}`.
    Zero,
    /// `[x1, x1] + [x2, x2] = 0` with both squares nonzero (odd coordinates).
    NotPointed {
        #[serde(serialize_with = "ser::vec")]
        x1: Vec<Rational>,
        #[serde(serialize_with = "ser::vec")]
        x2: Vec<Rational>,
        #[serde(serialize_with = "ser::vec")]
        square: Vec<Rational>,
    },
    Inconclusive {
        reason: String,
    },
}

impl ConeCertificate {
    pub fn verify(&self, g: &SuperAlgebra) -> bool {
        match self {
            ConeCertificate::Pointed { witness } => witness.verify(g),
            ConeCertificate::Zero => odd_squares_vanish(g),
            ConeCertificate::NotPointed { x1, x2, square } => {
                let (q1, q2) = (odd_square(g, x1), odd_square(g, x2));
                !vec_ops::is_zero(&q1) && q1 == *square && vec_ops::is_zero(&vec_ops::add(&q1, &q2))
            }
            ConeCertificate::Inconclusive { .. } => true,
        }
    }

    pub fn is_pointed(&self) -> bool {
        matches!(self, ConeCertificate::Pointed { .. } | ConeCertificate::Zero)
    }
}

/// Finds `y` with `[y, y] = −[x, x]` among rational multiples of `c`.
fn opposite_multiple(qx: &[Rational], qc: &[Rational], c: &[Rational]) -> Option<Vec<Rational>> {
    let k = qc.iter().position(|x| !x.is_zero())?;
    let r = -(&qx[k] / &qc[k]);
    if !r.is_positive() {
        return None;
    }
    if !vec_ops::is_zero(&vec_ops::add(qx, &vec_ops::scale(qc, &r))) {
        return None;
    }
    Some(vec_ops::scale(c, &rational_sqrt(&r)?))
}

/// Searches odd `X₁, X₂` with `[X₁, X₁] = −[X₂, X₂] ≠ 0`.
fn not_pointed_pair(g: &SuperAlgebra, seed: u64) -> Option<ConeCertificate> {
    let cands: Vec<(Vec<Rational>, Vec<Rational>)> = candidates(g.d1(), seed)
        .into_iter()
        .map(|v| (odd_square(g, &v), v))
        .filter(|(q, _)| !vec_ops::is_zero(q))
        .collect();
    for (i, (qx, x)) in cands.iter().enumerate() {
        for (qc, c) in &cands[i + 1..] {
            if let Some(y) = opposite_multiple(qx, qc, c) {
                return Some(ConeCertificate::NotPointed { x1: x.clone(), x2: y, square: qx.clone() });
            }
        }
    }
    None
}

pub fn cone_pointedness(g: &SuperAlgebra, seed: u64) -> ConeCertificate {
    cone_from_witness(g, &find_witness(g), seed)
}

pub(crate) fn cone_from_witness(g: &SuperAlgebra, w: &WitnessOutcome, seed: u64) -> ConeCertificate {
    if let WitnessOutcome::Found(witness) = w {
        return ConeCertificate::Pointed { witness: witness.clone() };
    }
    if odd_squares_vanish(g) {
        return ConeCertificate::Zero;
    }
    not_pointed_pair(g, seed).unwrap_or_else(|| ConeCertificate::Inconclusive {
        reason: "no witness and no opposite pair among the sampled odd vectors".into(),
    })
}

/// Nonzero odd `X` with `[X, X] = 0`: zero-square candidates, then roots of
/// `t ↦ [u + t v, u + t v]` on lines through pairs of candidates.
pub fn find_null_odd(g: &SuperAlgebra, seed: u64) -> Option<Vec<Rational>> {
    let d1 = g.d1();
    if d1 == 0 {
        return None;
    }
    let cands = candidates(d1, seed);
    let squares: Vec<Vec<Rational>> = cands.iter().map(|v| odd_square(g, v)).collect();
    if let Some(k) = squares.iter().position(|q| vec_ops::is_zero(q)) {
        return Some(cands[k].clone());
    }
    let basis_and_random: Vec<usize> = (0..d1).chain(cands.len() - RANDOM_SAMPLES..cands.len()).collect();
    for (ii, &i) in basis_and_random.iter().enumerate() {
        for &j in &basis_and_random[ii + 1..] {
            let (u, v) = (&cands[i], &cands[j]);
            let mixed = vec_ops::scale(&odd_bracket(g, u, v), &rat(2));
            let Some(k) =
                (0..g.d0()).find(|&k| !squares[i][k].is_zero() || !mixed[k].is_zero() || !squares[j][k].is_zero())
            else {
                continue;
            };
            let p = Poly::new(vec![squares[i][k].clone(), mixed[k].clone(), squares[j][k].clone()]);
            for t in rational_roots(&p) {
                let mut x = u.clone();
                vec_ops::axpy(&mut x, &t, v);
                if !vec_ops::is_zero(&x) && vec_ops::is_zero(&odd_square(g, &x)) {
                    return Some(x);
                }
            }
        }
    }
    None
}
