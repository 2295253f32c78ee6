//! Direct sums, quotients, subalgebras, semidirect products with a
//! derivation, and central extensions by an odd 2-cocycle.

use num_traits::Zero;

use super::forms::check_invariant_form;
use super::space::{Parity, SuperSpace};
use super::structure::SuperAlgebra;
use super::subspace::Subspace;
use crate::exact::linalg::{inverse, solve};
use crate::exact::{vec_ops, QMatrix, Rational};
use crate::{Error, Result};

/// A basis of a subspace together with a coordinate solver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoordinateBasis {
    pub vectors: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
    pivot_inverse: QMatrix,
}

impl CoordinateBasis {
    /// Fails if the vectors are dependent.
    pub fn new(n: usize, vectors: Vec<Vec<Rational>>) -> Result<Self> {
        let s = Subspace::span(n, &vectors);
        if s.dim() != vectors.len() {
            return Err(Error::Precondition("basis vectors are linearly dependent".into()));
        }
        let pivots = s.pivots().to_vec();
        let k = vectors.len();
        let sub = QMatrix::from_fn(k, k, |i, j| vectors[i][pivots[j]].clone());
        let pivot_inverse = inverse(&sub).ok_or_else(|| Error::Defect("pivot block singular".into()))?;
        Ok(CoordinateBasis { vectors, pivots, pivot_inverse })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Coordinates of `v`, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let k = self.len();
        let x: Vec<Rational> = (0..k)
            .map(|j| {
                (0..k).fold(Rational::zero(), |acc, i| {
                    let w = &v[self.pivots[i]];
                    if w.is_zero() {
                        acc
                    } else {
                        acc + w * &self.pivot_inverse[(i, j)]
                    }
                })
            })
            .collect();
        let back = self.combine(&x);
        if back.as_slice() == v {
            Some(x)
        } else {
            None
        }
    }

    pub fn combine(&self, x: &[Rational]) -> Vec<Rational> {
        let n = self.vectors.first().map_or(0, Vec::len);
        vec_ops::combine(x, &self.vectors, n)
    }
}

/// Result of [`direct_sum`]: positions of the summands' basis vectors.
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub algebra: SuperAlgebra,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl DirectSum {
    pub fn embed_left(&self, v: &[Rational]) -> Vec<Rational> {
        embed(self.algebra.dim(), &self.left, v)
    }

    pub fn embed_right(&self, v: &[Rational]) -> Vec<Rational> {
        embed(self.algebra.dim(), &self.right, v)
    }
}

fn embed(n: usize, pos: &[usize], v: &[Rational]) -> Vec<Rational> {
    let mut out = vec_ops::zero(n);
    for (i, c) in v.iter().enumerate() {
        out[pos[i]] = c.clone();
    }
    out
}

/// `g ⊕ h` with cross brackets zero. Basis: even of `g`, even of `h`, odd of
/// `g`, odd of `h`.
pub fn direct_sum(g: &SuperAlgebra, h: &SuperAlgebra) -> DirectSum {
    let (g0, h0) = (g.d0(), h.d0());
    let left: Vec<usize> = (0..g.dim()).map(|i| if i < g0 { i } else { i + h0 }).collect();
    let right: Vec<usize> = (0..h.dim()).map(|i| if i < h0 { g0 + i } else { g.dim() + i }).collect();
    let n = g.dim() + h.dim();
    let mut labels = vec![String::new(); n];
    let mut parities = vec![Parity::Even; n];
    let clash = g.space().labels().iter().any(|l| h.space().labels().contains(l));
    for (i, &p) in left.iter().enumerate() {
        labels[p] = if clash { format!("1.{}", g.space().label(i)) } else { g.space().label(i).to_string() };
        parities[p] = g.parity(i);
    }
    for (i, &p) in right.iter().enumerate() {
        labels[p] = if clash { format!("2.{}", h.space().label(i)) } else { h.space().label(i).to_string() };
        parities[p] = h.parity(i);
    }
    let space = SuperSpace::new(labels, parities).expect("direct sum basis is graded");
    let mut brackets = Vec::new();
    for (alg, pos) in [(g, &left), (h, &right)] {
        for ((i, j), t) in alg.stored_brackets() {
            let mut v = vec_ops::zero(n);
            for (k, c) in t {
                v[pos[*k]] = c.clone();
            }
            brackets.push(((pos[i], pos[j]), v));
        }
    }
    let name = format!("{} + {}", g.name(), h.name());
    let algebra = SuperAlgebra::from_brackets(name, space, brackets).expect("direct sum is well formed");
    DirectSum { algebra, left, right }
}

/// Direct sum of several algebras, with the position map of each summand.
pub fn direct_sum_all(parts: &[SuperAlgebra]) -> (SuperAlgebra, Vec<Vec<usize>>) {
    let mut acc = SuperAlgebra::abelian("0", 0, 0);
    let mut maps: Vec<Vec<usize>> = Vec::new();
    for (idx, h) in parts.iter().enumerate() {
        let s = direct_sum(&acc, h);
        for m in maps.iter_mut() {
            for p in m.iter_mut() {
                *p = s.left[*p];
            }
        }
        maps.push(s.right.clone());
        acc = if idx == 0 { s.algebra.with_name(h.name().to_string()) } else { s.algebra };
    }
    (acc, maps)
}

/// Result of a quotient: the kept standard basis indices and the ideal.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: SuperAlgebra,
    pub keep: Vec<usize>,
    pub ideal: Subspace,
}

impl Quotient {
    /// The projection `g → g/i` in coordinates.
    pub fn project(&self, v: &[Rational]) -> Vec<Rational> {
        let r = self.ideal.reduce(v);
        self.keep.iter().map(|&k| r[k].clone()).collect()
    }
}

/// `g / i` for a graded ideal `i`, with basis the images of the standard
/// basis vectors off the pivots of `i`.
pub fn quotient_by_ideal(g: &SuperAlgebra, ideal: &Subspace) -> Result<Quotient> {
    if !ideal.is_graded(g) {
        return Err(Error::Precondition("ideal is not graded".into()));
    }
    if !g.is_ideal(ideal) {
        return Err(Error::Precondition("subspace is not an ideal".into()));
    }
    let keep = ideal.complement_indices();
    let labels = keep.iter().map(|&k| g.space().label(k).to_string()).collect();
    let parities = keep.iter().map(|&k| g.parity(k)).collect();
    let space = SuperSpace::new(labels, parities)?;
    let mut brackets = Vec::new();
    for (a, &i) in keep.iter().enumerate() {
        for (b, &j) in keep.iter().enumerate().skip(a) {
            let r = ideal.reduce(&g.basis_bracket(i, j));
            brackets.push(((a, b), keep.iter().map(|&k| r[k].clone()).collect()));
        }
    }
    let name = format!("{}/ideal", g.name());
    let algebra = SuperAlgebra::from_brackets(name, space, brackets)?;
    Ok(Quotient { algebra, keep, ideal: ideal.clone() })
}

/// `g / z` for a graded central subspace `z`.
pub fn quotient_by_central(g: &SuperAlgebra, z: &Subspace) -> Result<Quotient> {
    if !g.center().contains_space(z) {
        return Err(Error::NotCentral);
    }
    let mut q = quotient_by_ideal(g, z)?;
    q.algebra = q.algebra.with_name(format!("{}/z", g.name()));
    Ok(q)
}

/// A subalgebra, re-expressed in a parity-homogeneous basis of the given
/// subspace (even vectors first, each part in echelon order).
#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub algebra: SuperAlgebra,
    pub basis: CoordinateBasis,
}

pub fn subalgebra(g: &SuperAlgebra, s: &Subspace, name: &str) -> Result<Subalgebra> {
    if !s.is_graded(g) {
        return Err(Error::Precondition("subspace is not graded".into()));
    }
    let even = s.homogeneous_part(g, Parity::Even);
    let vectors = s.graded_basis(g);
    let basis = CoordinateBasis::new(g.dim(), vectors)?;
    let k = basis.len();
    let d0 = even.dim();
    let labels = (0..k).map(|i| if i < d0 { format!("e{i}") } else { format!("o{}", i - d0) }).collect();
    let parities = (0..k).map(|i| if i < d0 { Parity::Even } else { Parity::Odd }).collect();
    let space = SuperSpace::new(labels, parities)?;
    let mut brackets = Vec::new();
    for j in 0..k {
        for i in 0..=j {
            let b = g.bracket_unchecked(&basis.vectors[i], &basis.vectors[j]);
            let c = basis.coordinates(&b).ok_or(Error::NotClosed { pair: (i, j), residual: s.reduce(&b) })?;
            brackets.push(((i, j), c));
        }
    }
    let algebra = SuperAlgebra::from_brackets(name, space, brackets)?;
    Ok(Subalgebra { algebra, basis })
}

/// Checks `D[x,y] = [Dx,y] + (−1)^{|D||x|}[x,Dy]` on basis pairs and that `D`
/// shifts parity by `parity`.
pub fn check_derivation(g: &SuperAlgebra, d: &QMatrix, parity: Parity) -> Result<()> {
    let n = g.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: d.rows() });
    }
    for j in 0..n {
        for i in 0..n {
            if !d[(i, j)].is_zero() && g.parity(i) != g.parity(j) + parity {
                return Err(Error::Parity(format!("derivation entry ({i}, {j}) has the wrong parity")));
            }
        }
    }
    let cols: Vec<Vec<Rational>> = (0..n).map(|j| d.col(j)).collect();
    for i in 0..n {
        for j in i..n {
            let lhs = d.mul_vec(&g.basis_bracket(i, j));
            let mut rhs = g.bracket_unchecked(&cols[i], &g.unit(j));
            let t = g.bracket_basis(i, &cols[j]);
            let s = parity.sign(g.parity(i));
            vec_ops::axpy(&mut rhs, &Rational::from_integer(s.into()), &t);
            if lhs != rhs {
                return Err(Error::NotDerivation(i, j));
            }
        }
    }
    Ok(())
}

/// `g ⋊_D K`: adjoins one basis vector `d` of the given parity with
/// `[d, x] = Dx` and `[d, d] = 0`. An odd `D` must square to zero.
pub fn semidirect_by_derivation(g: &SuperAlgebra, d: &QMatrix, parity: Parity, label: &str) -> Result<SuperAlgebra> {
    check_derivation(g, d, parity)?;
    if parity.is_odd() && !(d * d).is_zero() {
        return Err(Error::OddSquareNonzero);
    }
    let n = g.dim();
    let at = match parity {
        Parity::Even => g.d0(),
        Parity::Odd => n,
    };
    let pos = |i: usize| if i < at { i } else { i + 1 };
    let m = n + 1;
    let mut labels = vec![String::new(); m];
    let mut parities = vec![Parity::Even; m];
    for i in 0..n {
        labels[pos(i)] = g.space().label(i).to_string();
        parities[pos(i)] = g.parity(i);
    }
    labels[at] = label.to_string();
    parities[at] = parity;
    let space = SuperSpace::new(labels, parities)?;
    let lift = |v: &[Rational]| {
        let mut out = vec_ops::zero(m);
        for (i, c) in v.iter().enumerate() {
            out[pos(i)] = c.clone();
        }
        out
    };
    let mut brackets = Vec::new();
    for ((i, j), t) in g.stored_brackets() {
        let mut v = vec_ops::zero(m);
        for (k, c) in t {
            v[pos(*k)] = c.clone();
        }
        brackets.push(((pos(i), pos(j)), v));
    }
    for j in 0..n {
        brackets.push(((at, pos(j)), lift(&d.col(j))));
    }
    let name = format!("{} x| {}", g.name(), label);
    SuperAlgebra::from_brackets(name, space, brackets)
}

/// `K ⊕_ω g` with `ω(x, y) = β(x₁, y₁)`: adjoins a central even vector `c`
/// with `[a, b] ↦ [a, b] + β(a, b)·c` for odd `a, b`. `beta` is the Gram
/// matrix on the odd basis vectors and must be symmetric and invariant.
pub fn central_extension(g: &SuperAlgebra, beta: &QMatrix, label: &str) -> Result<SuperAlgebra> {
    check_invariant_form(g, Parity::Odd, beta)?;
    let n = g.dim();
    let at = g.d0();
    let pos = |i: usize| if i < at { i } else { i + 1 };
    let m = n + 1;
    let mut labels = vec![String::new(); m];
    let mut parities = vec![Parity::Even; m];
    for i in 0..n {
        labels[pos(i)] = g.space().label(i).to_string();
        parities[pos(i)] = g.parity(i);
    }
    labels[at] = label.to_string();
    let space = SuperSpace::new(labels, parities)?;
    let mut brackets = Vec::new();
    for j in 0..n {
        for i in 0..=j {
            let mut v = vec_ops::zero(m);
            g.for_each_term(i, j, |k, c| v[pos(k)] = c.clone());
            if i >= at {
                v[at] = beta[(i - at, j - at)].clone();
            }
            brackets.push(((pos(i), pos(j)), v));
        }
    }
    let name = format!("{}^", g.name());
    SuperAlgebra::from_brackets(name, space, brackets)
}

/// Functional `λ` on `g` with `ω(x, y) = λ([x, y])` for all basis pairs, where
/// `ω(x, y) = β(x₁, y₁)`. The returned `λ` has been checked to split the
/// extension: `x ↦ x + λ(x)·c` is a homomorphism into `K ⊕_ω g`.
pub fn is_trivial_cocycle(g: &SuperAlgebra, beta: &QMatrix) -> Result<Option<Vec<Rational>>> {
    check_invariant_form(g, Parity::Odd, beta)?;
    let n = g.dim();
    let at = g.d0();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for j in 0..n {
        for i in 0..=j {
            rows.push(g.basis_bracket(i, j));
            rhs.push(if i >= at { beta[(i - at, j - at)].clone() } else { Rational::zero() });
        }
    }
    let Some(sol) = solve(&QMatrix::from_rows(rows), &rhs) else {
        return Ok(None);
    };
    let lambda = sol.particular;
    let ext = central_extension(g, beta, "c")?;
    let c = at;
    let section = |i: usize| {
        let mut v = vec_ops::zero(n + 1);
        v[if i < at { i } else { i + 1 }] = Rational::from_integer(1.into());
        v[c] = lambda[i].clone();
        v
    };
    for j in 0..n {
        for i in 0..=j {
            let lhs = ext.bracket_unchecked(&section(i), &section(j));
            let b = g.basis_bracket(i, j);
            let mut rhs = vec_ops::zero(n + 1);
            for (k, x) in b.iter().enumerate() {
                if !x.is_zero() {
                    vec_ops::axpy(&mut rhs, x, &section(k));
                }
            }
            if lhs != rhs {
                return Err(Error::Defect(format!("splitting map fails at ({i}, {j})")));
            }
        }
    }
    Ok(Some(lambda))
}
