//! Univariate polynomials over the rationals, characteristic polynomials, and
//! splitting into coprime factors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::matrix::QMatrix;
use super::scalar::Rational;

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `t − r`
    pub fn linear(r: &Rational) -> Self {
        Poly::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.leading();
        Poly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &QMatrix) -> QMatrix {
        let n = m.rows();
        let mut acc = QMatrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            for i in 0..n {
                acc[(i, i)] += c;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * Rational::from_integer(BigInt::from(i))).collect(),
        )
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = o.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Poly::new(c)
    }

    pub fn pow(&self, k: usize) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.coeffs.len() - 1;
        let lead = d.leading();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Poly::new(q), Poly::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact quotient; panics if `d` does not divide.
    pub fn exact_div(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{a}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Characteristic polynomial `det(t·1 − m)` via reduction to upper Hessenberg
/// form.
pub fn char_poly(m: &QMatrix) -> Poly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(p) = (j + 1..n).find(|&i| !h[(i, j)].is_zero()) else {
            continue;
        };
        if p != j + 1 {
            for c in 0..n {
                let t = h[(p, c)].clone();
                h[(p, c)] = h[(j + 1, c)].clone();
                h[(j + 1, c)] = t;
            }
            for r in 0..n {
                let t = h[(r, p)].clone();
                h[(r, p)] = h[(r, j + 1)].clone();
                h[(r, j + 1)] = t;
            }
        }
        let piv = h[(j + 1, j)].clone();
        for i in j + 2..n {
            if h[(i, j)].is_zero() {
                continue;
            }
            let f = &h[(i, j)] / &piv;
            for c in 0..n {
                let v = &f * &h[(j + 1, c)];
                if !v.is_zero() {
                    h[(i, c)] -= v;
                }
            }
            for r in 0..n {
                let v = &f * &h[(r, i)];
                if !v.is_zero() {
                    h[(r, j + 1)] += v;
                }
            }
        }
    }
    // p_k = characteristic polynomial of the leading k×k block
    let mut p: Vec<Poly> = vec![Poly::one()];
    for k in 0..n {
        let mut next = Poly::linear(&h[(k, k)]).mul(&p[k]);
        let mut prod = Rational::one();
        for i in (0..k).rev() {
            prod *= &h[(i + 1, i)];
            if prod.is_zero() {
                break;
            }
            let c = &prod * &h[(i, k)];
            next = next.add(&p[i].mul(&Poly::constant(-c)));
        }
        p.push(next);
    }
    p.pop().unwrap()
}

/// Square-free factorization (Yun): returns `(a_i, i)` with `f = lc·∏ a_i^i`,
/// each `a_i` monic, square-free, and pairwise coprime.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = f.monic();
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.exact_div(&a0);
    let mut c = fp.exact_div(&a0);
    let mut d = c.add(&b.derivative().mul(&Poly::constant(-Rational::one())));
    let mut i = 1;
    loop {
        let a = b.gcd(&d);
        if a.degree() != Some(0) {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a);
        if b.degree() == Some(0) {
            break;
        }
        c = d.exact_div(&a);
        d = c.add(&b.derivative().mul(&Poly::constant(-Rational::one())));
        i += 1;
    }
    out
}

const TRIAL_LIMIT: u64 = 1_000_000;

/// Prime factorization by trial division; `None` if a cofactor above the
/// trial bound remains that is not certainly prime.
fn factor_integer(n: &BigInt) -> Option<Vec<(BigInt, u32)>> {
    let mut n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return None;
    }
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let bp = BigInt::from(p);
        if &bp * &bp > n {
            break;
        }
        let mut e = 0;
        while (&n % &bp).is_zero() {
            n /= &bp;
            e += 1;
        }
        if e > 0 {
            out.push((bp, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !n.is_one() {
        let bound = BigInt::from(TRIAL_LIMIT);
        if n > &bound * &bound {
            return None;
        }
        out.push((n, 1));
    }
    Some(out)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let f = factor_integer(n)?;
    let mut ds = vec![BigInt::one()];
    for (p, e) in f {
        let mut next = Vec::with_capacity(ds.len() * (e as usize + 1));
        for d in &ds {
            let mut x = d.clone();
            for _ in 0..=e {
                next.push(x.clone());
                x *= &p;
            }
        }
        ds = next;
    }
    Some(ds)
}

/// Primitive integer polynomial proportional to `f`.
fn integer_primitive(f: &Poly) -> Vec<BigInt> {
    let l = f.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    ints.into_iter().map(|c| c / &g).collect()
}

/// Rational roots of `f`, without multiplicity. Roots whose candidate set
/// cannot be enumerated (coefficients beyond the trial factoring bound) are
/// missed, never invented.
pub fn rational_roots(f: &Poly) -> Vec<Rational> {
    let mut roots = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let mut f = f.clone();
    if f.coeffs[0].is_zero() {
        roots.push(Rational::zero());
        let k = f.coeffs.iter().take_while(|c| c.is_zero()).count();
        f = Poly::new(f.coeffs[k..].to_vec());
    }
    if f.degree() == Some(0) {
        return roots;
    }
    let ints = integer_primitive(&f);
    let (Some(ps), Some(qs)) = (divisors(&ints[0]), divisors(ints.last().unwrap())) else {
        return roots;
    };
    let mut found = Vec::new();
    for q in &qs {
        for p in &ps {
            if !p.gcd(q).is_one() {
                continue;
            }
            for s in [1, -1] {
                let r = Rational::new(p * s, q.clone());
                if f.eval(&r).is_zero() {
                    found.push(r);
                }
            }
        }
        if found.len() >= f.degree().unwrap() {
            break;
        }
    }
    roots.extend(found);
    roots.sort();
    roots
}

/// Characteristic polynomial together with a factorization into pairwise
/// coprime monic factors with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPolySplit {
    pub char_poly: Poly,
    /// Rational roots with their algebraic multiplicity, ascending.
    pub roots: Vec<(Rational, usize)>,
    /// Pairwise coprime monic factors `(f, e)`; `∏ f^e` is the characteristic
    /// polynomial. Linear factors come first, ordered by root.
    pub factors: Vec<(Poly, usize)>,
}

impl CharPolySplit {
    pub fn product(&self) -> Poly {
        self.factors.iter().fold(Poly::one(), |acc, (f, e)| acc.mul(&f.pow(*e)))
    }
}

pub fn char_poly_and_rational_split(m: &QMatrix) -> CharPolySplit {
    let cp = char_poly(m);
    let mut roots = Vec::new();
    let mut rest = Vec::new();
    for (a, e) in squarefree_decomposition(&cp) {
        let mut a = a;
        for r in rational_roots(&a) {
            roots.push((r.clone(), e));
            a = a.exact_div(&Poly::linear(&r));
        }
        if a.degree().unwrap_or(0) > 0 {
            rest.push((a, e));
        }
    }
    roots.sort();
    let mut factors: Vec<(Poly, usize)> = roots.iter().map(|(r, e)| (Poly::linear(r), *e)).collect();
    factors.extend(rest);
    CharPolySplit { char_poly: cp, roots, factors }
}

/// Small non-negative integer value of `r`, if it is one.
pub fn as_small_usize(r: &Rational) -> Option<usize> {
    if r.is_integer() && !r.is_negative() {
        r.to_integer().to_usize()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::determinant;
    use crate::exact::scalar::{rat, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> Poly {
        Poly::new(c.iter().map(|&x| rat(x)).collect())
    }

    fn q(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    #[test]
    fn split_examples() {
        let s = char_poly_and_rational_split(&q(&[&[1, 0], &[0, 2]]));
        assert_eq!(s.char_poly, p(&[2, -3, 1]));
        assert_eq!(s.roots, vec![(rat(1), 1), (rat(2), 1)]);

        let s = char_poly_and_rational_split(&q(&[&[0, 1], &[-1, 0]]));
        assert_eq!(s.char_poly, p(&[1, 0, 1]));
        assert!(s.roots.is_empty());
        assert_eq!(s.factors, vec![(p(&[1, 0, 1]), 1)]);

        let s = char_poly_and_rational_split(&q(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 5]]));
        assert_eq!(s.roots, vec![(rat(3), 2), (rat(5), 1)]);
        assert_eq!(s.product(), s.char_poly);
    }

    #[test]
    fn su2_adjoint_rotation() {
        // ad of diag(i,-i) on su(2) in the basis (diag(i,-i), e12-e21, i(e12+e21))
        let m = q(&[&[0, 0, 0], &[0, 0, -2], &[0, 2, 0]]);
        assert_eq!(char_poly(&m), p(&[0, 4, 0, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, 0, -2, 1]).to_string(), "t^3 - 2t^2 + 1");
        assert_eq!(Poly::new(vec![ratio(-1, 2), rat(1)]).to_string(), "t - 1/2");
    }

    #[test]
    fn yun_multiplicities() {
        // (t-1)^3 (t^2+1)^2 t
        let f = Poly::linear(&rat(1)).pow(3).mul(&p(&[1, 0, 1]).pow(2)).mul(&p(&[0, 1]));
        let sq = squarefree_decomposition(&f);
        assert_eq!(sq, vec![(p(&[0, 1]), 1), (p(&[1, 0, 1]), 2), (p(&[-1, 1]), 3)]);
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = QMatrix> {
        proptest::collection::vec((-3i64..4, 1i64..3), n * n)
            .prop_map(move |v| QMatrix::from_fn(n, n, |i, j| ratio(v[i * n + j].0, v[i * n + j].1)))
    }

    proptest! {
        #[test]
        fn char_poly_matches_determinant(m in arb_matrix(4), x in -5i64..6) {
            let x = rat(x);
            let shifted = QMatrix::from_fn(4, 4, |i, j| {
                let d = if i == j { x.clone() } else { rat(0) };
                d - m[(i, j)].clone()
            });
            prop_assert_eq!(char_poly(&m).eval(&x), determinant(&shifted));
        }

        #[test]
        fn split_reconstructs(m in arb_matrix(4)) {
            let s = char_poly_and_rational_split(&m);
            prop_assert_eq!(s.product(), s.char_poly.clone());
            for (r, _) in &s.roots {
                prop_assert!(s.char_poly.eval(r).is_zero());
            }
            // Cayley–Hamilton
            prop_assert!(s.char_poly.eval_matrix(&m).is_zero());
        }
    }
}
