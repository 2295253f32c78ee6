//! Matrix realizations: u(p|q) and its relatives, q(n), c(n), and the
//! compact simple Lie algebras su(n), so(n), sp(n).

use num_traits::Zero;

use crate::algebra::block::{from_matrix_span, unit_matrix, BlockMatrix, MatrixRealization};
use crate::algebra::{Parity, SuperAlgebra};
use crate::exact::linalg::IncrementalKernel;
use crate::exact::{CMatrix, Rational, Scalar};
use crate::Result;

pub type Built = (SuperAlgebra, MatrixRealization);

fn one() -> Scalar {
    Scalar::from_int(1)
}

fn i() -> Scalar {
    Scalar::i()
}

fn e(n: usize, r: usize, c: usize, s: Scalar) -> CMatrix {
    unit_matrix(n, r, c, s)
}

/// Real basis of `u(n)` placed at offset `off` inside `N×N` matrices.
fn u_basis(big: usize, off: usize, n: usize) -> Vec<CMatrix> {
    let mut out = Vec::new();
    for k in 0..n {
        out.push(e(big, off + k, off + k, i()));
    }
    for k in 0..n {
        for l in k + 1..n {
            out.push(&e(big, off + k, off + l, one()) - &e(big, off + l, off + k, one()));
            out.push(&e(big, off + k, off + l, i()) + &e(big, off + l, off + k, i()));
        }
    }
    out
}

/// Off-diagonal part of `u(n)` (everything but the diagonal `i·E_kk`).
fn u_offdiag(big: usize, off: usize, n: usize) -> Vec<CMatrix> {
    u_basis(big, off, n).into_iter().skip(n).collect()
}

/// Odd basis of `u(p|q)`: `[[0, B], [iB*, 0]]` for `B = E_kl, i·E_kl`.
fn u_odd(p: usize, q: usize) -> Vec<CMatrix> {
    let n = p + q;
    let mut out = Vec::new();
    for k in 0..p {
        for l in 0..q {
            out.push(&e(n, k, p + l, one()) + &e(n, p + l, k, i()));
            out.push(&e(n, k, p + l, i()) + &e(n, p + l, k, one()));
        }
    }
    out
}

fn labelled(prefix: &str, parity: Parity, p: usize, q: usize, ms: Vec<CMatrix>) -> Result<Vec<(String, BlockMatrix)>> {
    ms.into_iter().enumerate().map(|(k, m)| Ok((format!("{prefix}{k}"), BlockMatrix::new(p, q, m, parity)?))).collect()
}

fn assemble(name: &str, p: usize, q: usize, even: Vec<CMatrix>, odd: Vec<CMatrix>) -> Result<Built> {
    let mut elems = labelled("e", Parity::Even, p, q, even)?;
    elems.extend(labelled("o", Parity::Odd, p, q, odd)?);
    from_matrix_span(name, p, q, elems)
}

pub fn u(p: usize, q: usize) -> Result<Built> {
    let n = p + q;
    let mut even = u_basis(n, 0, p);
    even.extend(u_basis(n, p, q));
    assemble(&format!("u({p}|{q})"), p, q, even, u_odd(p, q))
}

/// `gl(p|q; C)` viewed as a real algebra: `E_kl` and `i·E_kl`.
pub fn gl(p: usize, q: usize) -> Result<Built> {
    let n = p + q;
    let (mut even, mut odd) = (Vec::new(), Vec::new());
    for r in 0..n {
        for c in 0..n {
            let target = if (r < p) == (c < p) { &mut even } else { &mut odd };
            target.push(e(n, r, c, one()));
            target.push(e(n, r, c, i()));
        }
    }
    assemble(&format!("gl({p}|{q})"), p, q, even, odd)
}

/// Diagonal of `su(n|m)`: consecutive differences in each block plus one
/// element bridging the blocks (supertrace zero).
fn su_diagonal(n: usize, m: usize) -> Vec<CMatrix> {
    let big = n + m;
    let mut out = Vec::new();
    for k in 0..n.saturating_sub(1) {
        out.push(&e(big, k, k, i()) - &e(big, k + 1, k + 1, i()));
    }
    for k in n..big.saturating_sub(1) {
        out.push(&e(big, k, k, i()) - &e(big, k + 1, k + 1, i()));
    }
    if n > 0 && m > 0 {
        out.push(&e(big, n - 1, n - 1, i()) + &e(big, n, n, i()));
    }
    out
}

pub fn su(n: usize, m: usize) -> Result<Built> {
    let mut even = su_diagonal(n, m);
    even.extend(u_offdiag(n + m, 0, n));
    even.extend(u_offdiag(n + m, n, m));
    assemble(&format!("su({n}|{m})"), n, m, even, u_odd(n, m))
}

/// Coordinates of `i·1` in a realization containing it.
pub fn i_one(real: &MatrixRealization) -> Vec<Rational> {
    let n = real.p + real.q;
    real.coordinates(&CMatrix::identity(n).scale(&i())).expect("i·1 lies in the algebra")
}

/// `[[a, b], [b, a]]` from `n×n` blocks.
fn doubled(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let n = a.rows();
    CMatrix::from_fn(2 * n, 2 * n, |r, c| {
        let (rr, cc) = (r % n, c % n);
        if (r < n) == (c < n) {
            a[(rr, cc)].clone()
        } else {
            b[(rr, cc)].clone()
        }
    })
}

/// `q(n)`, or `q̂(n)` when `hat` (trace condition on `b` dropped).
pub fn q(n: usize, hat: bool) -> Result<Built> {
    let k = n + 1;
    let zero = CMatrix::zeros(k, k);
    let even: Vec<CMatrix> = u_basis(k, 0, k).iter().map(|a| doubled(a, &zero)).collect();
    // b = (1 − i)·x with x ∈ su(k), or x ∈ u(k) for the hat version
    let mut xs = su_diagonal(k, 0);
    xs.extend(u_offdiag(k, 0, k));
    if hat {
        xs.push(CMatrix::identity(k).scale(&i()));
    }
    let f = Scalar::gauss(1, -1);
    let odd = xs.iter().map(|x| doubled(&zero, &x.scale(&f))).collect();
    let name = if hat { format!("q^({n})") } else { format!("q({n})") };
    assemble(&name, k, k, even, odd)
}

/// Standard symplectic Gram matrix `[[0, 1], [−1, 0]]` of size `2m`.
pub fn symplectic(m: usize) -> CMatrix {
    CMatrix::from_fn(2 * m, 2 * m, |r, c| {
        if r < m && c == r + m {
            one()
        } else if r >= m && c + m == r {
            -one()
        } else {
            Scalar::zero()
        }
    })
}

/// Real basis of `{X in the parity block : L(X) = 0}` for a real-linear map
/// `L`, given as a list of matrix-valued constraints.
pub fn real_solutions(
    p: usize,
    q: usize,
    parity: Parity,
    constraints: &dyn Fn(&CMatrix) -> Vec<CMatrix>,
) -> Vec<CMatrix> {
    let n = p + q;
    let mut generators = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let block_even = (r < p) == (c < p);
            if block_even == (parity == Parity::Even) {
                generators.push(e(n, r, c, one()));
                generators.push(e(n, r, c, i()));
            }
        }
    }
    let images: Vec<Vec<Rational>> =
        generators.iter().map(|x| constraints(x).iter().flat_map(|m| m.realified_coords()).collect()).collect();
    let len = images.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Rational>> = (0..len)
        .map(|k| images.iter().map(|v| v[k].clone()).collect::<Vec<_>>())
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .collect();
    let mut inc = IncrementalKernel::new(generators.len());
    inc.constrain(&rows);
    inc.basis()
        .iter()
        .map(|coef| {
            coef.iter().zip(&generators).fold(CMatrix::zeros(n, n), |acc, (c, g)| {
                if c.is_zero() {
                    acc
                } else {
                    &acc + &g.scale(&Scalar::real(c.clone()))
                }
            })
        })
        .collect()
}

/// `Xᵀ Ω + s(u) Ω X` with `s(u) = (−1)^{|X||u|}`: the super-orthosymplectic
/// condition for the supersymmetric form `Ω` with `p` even coordinates.
fn osp_condition(x: &CMatrix, omega: &CMatrix, p: usize, parity: Parity) -> CMatrix {
    let a = &x.transpose() * omega;
    let b = omega * x;
    CMatrix::from_fn(x.rows(), x.cols(), |r, c| {
        let odd_row = r >= p;
        if parity.is_odd() && odd_row {
            &a[(r, c)] - &b[(r, c)]
        } else {
            &a[(r, c)] + &b[(r, c)]
        }
    })
}

/// Compact real form of `osp(2|2n−2)`: even part `osp₀ ∩ u(2) ⊕ u(2n−2)`,
/// odd part `{[[0, B], [C, 0]] ∈ osp : B = R·conj(B)·J}` with
/// `R = [[0, 1], [−1, 0]]` and `J` the symplectic Gram matrix.
pub fn c(n: usize) -> Result<Built> {
    let m = 2 * n - 2;
    let big = 2 + m;
    let omega = CMatrix::from_fn(big, big, |r, c| {
        if r < 2 || c < 2 {
            if r == c {
                one()
            } else {
                Scalar::zero()
            }
        } else {
            symplectic(n - 1)[(r - 2, c - 2)].clone()
        }
    });
    let jm = symplectic(n - 1);
    let rr = symplectic(1);
    let even = real_solutions(2, m, Parity::Even, &|x: &CMatrix| {
        vec![osp_condition(x, &omega, 2, Parity::Even), x + &x.conj_transpose()]
    });
    let odd = real_solutions(2, m, Parity::Odd, &|x: &CMatrix| {
        let b = x.select(&[0, 1], &(2..big).collect::<Vec<_>>());
        let twisted = &(&rr * &b.conj()) * &jm;
        vec![osp_condition(x, &omega, 2, Parity::Odd), &b - &twisted]
    });
    assemble(&format!("c({n})"), 2, m, even, odd)
}

/// Compact simple Lie algebras as purely even superalgebras.
pub fn su_lie(n: usize) -> Result<Built> {
    let mut even = su_diagonal(n, 0);
    even.extend(u_offdiag(n, 0, n));
    assemble(&format!("su({n})"), n, 0, even, Vec::new())
}

pub fn so_lie(n: usize) -> Result<Built> {
    let mut even = Vec::new();
    for k in 0..n {
        for l in k + 1..n {
            even.push(&e(n, k, l, one()) - &e(n, l, k, one()));
        }
    }
    assemble(&format!("so({n})"), n, 0, even, Vec::new())
}

/// `sp(n) = u(2n) ∩ sp(2n, C)`.
pub fn sp_lie(n: usize) -> Result<Built> {
    let j = symplectic(n);
    let even = real_solutions(2 * n, 0, Parity::Even, &|x: &CMatrix| {
        vec![x + &x.conj_transpose(), &(&x.transpose() * &j) + &(&j * x)]
    });
    assemble(&format!("sp({n})"), 2 * n, 0, even, Vec::new())
}

/// Realified complex `sl(2, C)` as a purely even algebra (not compact).
pub fn sl2c_realified() -> Result<Built> {
    let h = &e(2, 0, 0, one()) - &e(2, 1, 1, one());
    let ms = vec![h.clone(), h.scale(&i()), e(2, 0, 1, one()), e(2, 0, 1, i()), e(2, 1, 0, one()), e(2, 1, 0, i())];
    assemble("sl(2,C)", 2, 0, ms, Vec::new())
}
