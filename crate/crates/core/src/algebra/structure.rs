//! Lie superalgebras given by real structure constants.

use num_traits::{One, Zero};

use super::space::{Parity, SuperSpace};
use crate::exact::{vec_ops, QMatrix, Rational};
use crate::{Error, Result};

/// Sparse vector: `(basis index, nonzero coefficient)`, ascending indices.
pub type Terms = Vec<(usize, Rational)>;

fn tri(i: usize, j: usize) -> usize {
    debug_assert!(i <= j);
    j * (j + 1) / 2 + i
}

pub fn to_terms(v: &[Rational]) -> Terms {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

/// A real Lie superalgebra. Only the brackets `[e_i, e_j]` with `i ≤ j` are
/// stored; the others follow from super skew-symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperAlgebra {
    name: String,
    space: SuperSpace,
    table: Vec<Terms>,
}

impl SuperAlgebra {
    /// Builds the algebra from brackets of basis pairs. Pairs may be given in
    /// either order; missing pairs bracket to zero. Checks parity closure and
    /// that every even basis vector brackets to zero with itself.
    pub fn from_brackets(
        name: impl Into<String>,
        space: SuperSpace,
        brackets: impl IntoIterator<Item = ((usize, usize), Vec<Rational>)>,
    ) -> Result<Self> {
        let n = space.dim();
        let mut table = vec![Terms::new(); n * (n + 1) / 2];
        let mut seen = vec![false; table.len()];
        for ((i, j), v) in brackets {
            if i >= n || j >= n || v.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.len().max(i.max(j) + 1) });
            }
            let (a, b, v) = if i <= j {
                (i, j, v)
            } else {
                let s = -space.parity(i).sign(space.parity(j));
                (j, i, vec_ops::scale(&v, &Rational::from_integer(s.into())))
            };
            let t = tri(a, b);
            let terms = to_terms(&v);
            if seen[t] && table[t] != terms {
                return Err(Error::Parity(format!("conflicting brackets given for ({a}, {b})")));
            }
            seen[t] = true;
            table[t] = terms;
        }
        let g = SuperAlgebra { name: name.into(), space, table };
        g.check_table()?;
        Ok(g)
    }

    /// Builds the algebra from a function giving `[e_i, e_j]` for `i ≤ j` as a
    /// dense vector.
    pub fn from_fn(
        name: impl Into<String>,
        space: SuperSpace,
        mut f: impl FnMut(usize, usize) -> Vec<Rational>,
    ) -> Result<Self> {
        let n = space.dim();
        let mut pairs = Vec::new();
        for j in 0..n {
            for i in 0..=j {
                pairs.push(((i, j), f(i, j)));
            }
        }
        Self::from_brackets(name, space, pairs)
    }

    /// Abelian algebra with the given dimensions.
    pub fn abelian(name: impl Into<String>, d0: usize, d1: usize) -> Self {
        let space = SuperSpace::with_dims(d0, d1);
        let n = space.dim();
        SuperAlgebra { name: name.into(), space, table: vec![Terms::new(); n * (n + 1) / 2] }
    }

    fn check_table(&self) -> Result<()> {
        let n = self.dim();
        for j in 0..n {
            for i in 0..=j {
                let p = self.space.parity(i) + self.space.parity(j);
                let t = &self.table[tri(i, j)];
                if let Some((k, _)) = t.iter().find(|(k, _)| self.space.parity(*k) != p) {
                    return Err(Error::Parity(format!("[{i}, {j}] has a component along {k}")));
                }
                if i == j && self.space.parity(i) == Parity::Even && !t.is_empty() {
                    return Err(Error::Parity(format!("[{i}, {i}] must vanish for an even vector")));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn d0(&self) -> usize {
        self.space.d0()
    }

    pub fn d1(&self) -> usize {
        self.space.d1()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    /// Stored brackets `[e_i, e_j]`, `i ≤ j`, that are nonzero.
    pub fn stored_brackets(&self) -> impl Iterator<Item = ((usize, usize), &Terms)> + '_ {
        let n = self.dim();
        (0..n)
            .flat_map(move |j| (0..=j).map(move |i| (i, j)))
            .map(move |(i, j)| ((i, j), &self.table[tri(i, j)]))
            .filter(|(_, t)| !t.is_empty())
    }

    /// Calls `f(k, c)` for each term `c·e_k` of `[e_i, e_j]`.
    pub fn for_each_term(&self, i: usize, j: usize, mut f: impl FnMut(usize, &Rational)) {
        if i <= j {
            for (k, c) in &self.table[tri(i, j)] {
                f(*k, c);
            }
        } else if self.parity(i).is_odd() && self.parity(j).is_odd() {
            for (k, c) in &self.table[tri(j, i)] {
                f(*k, c);
            }
        } else {
            for (k, c) in &self.table[tri(j, i)] {
                f(*k, &-c.clone());
            }
        }
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        let mut v = vec_ops::zero(self.dim());
        self.for_each_term(i, j, |k, c| v[k] += c);
        v
    }

    fn check_len(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }

    /// `[x, y]` for arbitrary (not necessarily homogeneous) vectors.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec_ops::zero(self.dim());
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi * yj;
                self.for_each_term(i, j, |k, c| out[k] += &s * c);
            }
        }
        out
    }

    /// `[e_i, y]`
    pub fn bracket_basis(&self, i: usize, y: &[Rational]) -> Vec<Rational> {
        let mut out = vec_ops::zero(self.dim());
        for (j, yj) in y.iter().enumerate() {
            if yj.is_zero() {
                continue;
            }
            self.for_each_term(i, j, |k, c| out[k] += yj * c);
        }
        out
    }

    /// Parity of a homogeneous nonzero vector.
    pub fn parity_of(&self, v: &[Rational]) -> Option<Parity> {
        let mut p = None;
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let q = self.parity(i);
            match p {
                None => p = Some(q),
                Some(pp) if pp != q => return None,
                _ => {}
            }
        }
        p
    }

    /// Checks parity closure, super skew-symmetry, and the super Jacobi
    /// identity `[x,[y,z]] = [[x,y],z] + (−1)^{|x||y|}[y,[x,z]]` on all basis
    /// triples.
    pub fn verify(&self) -> Result<()> {
        self.check_table()?;
        let n = self.dim();
        let brackets: Vec<Vec<Terms>> =
            (0..n).map(|i| (0..n).map(|j| to_terms(&self.basis_bracket(i, j))).collect()).collect();
        // Σ_l c_l [e_a, e_l] for a sparse vector, accumulated into `out`
        let apply = |out: &mut Vec<Rational>, a: usize, v: &Terms, scale: &Rational, left: bool| {
            for (l, c) in v {
                let s = c * scale;
                for (k, d) in if left { &brackets[a][*l] } else { &brackets[*l][a] } {
                    out[*k] += &s * d;
                }
            }
        };
        let one = Rational::one();
        for i in 0..n {
            for j in 0..n {
                let s = Rational::from_integer(self.parity(i).sign(self.parity(j)).into());
                for k in 0..n {
                    let mut lhs = vec_ops::zero(n);
                    apply(&mut lhs, i, &brackets[j][k], &one, true);
                    let mut rhs = vec_ops::zero(n);
                    apply(&mut rhs, k, &brackets[i][j], &one, false);
                    apply(&mut rhs, j, &brackets[i][k], &s, true);
                    if lhs != rhs {
                        return Err(Error::Jacobi { triple: (i, j, k), lhs, rhs });
                    }
                }
            }
        }
        Ok(())
    }

    /// Matrix of `ad e_i` in the standard basis.
    pub fn ad_basis(&self, i: usize) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for j in 0..n {
            self.for_each_term(i, j, |k, c| m[(k, j)] += c);
        }
        m
    }

    /// Matrix of `ad x`.
    pub fn adjoint(&self, x: &[Rational]) -> Result<QMatrix> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for j in 0..n {
                self.for_each_term(i, j, |k, c| m[(k, j)] += xi * c);
            }
        }
        Ok(m)
    }

    /// Supertrace of an endomorphism of the underlying space.
    pub fn supertrace(&self, m: &QMatrix) -> Rational {
        let mut s = Rational::zero();
        for k in 0..self.dim() {
            match self.parity(k) {
                Parity::Even => s += &m[(k, k)],
                Parity::Odd => s -= &m[(k, k)],
            }
        }
        s
    }

    /// Gram matrix of `κ(x, y) = str(ad x ∘ ad y)`.
    pub fn killing_form(&self) -> QMatrix {
        let n = self.dim();
        // ad[i] as sparse columns: ad[i][l] = terms of [e_i, e_l]
        let ads: Vec<Vec<Terms>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|l| {
                        let mut t = Terms::new();
                        self.for_each_term(i, l, |k, c| t.push((k, c.clone())));
                        t
                    })
                    .collect()
            })
            .collect();
        let mut g = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                if self.parity(i) != self.parity(j) {
                    continue;
                }
                // Σ_k sgn(k) Σ_l (ad_i)_{k l} (ad_j)_{l k}
                let mut s = Rational::zero();
                for k in 0..n {
                    for (l, c) in &ads[j][k] {
                        for (kk, d) in &ads[i][*l] {
                            if *kk == k {
                                let v = c * d;
                                match self.parity(k) {
                                    Parity::Even => s += v,
                                    Parity::Odd => s -= v,
                                }
                            }
                        }
                    }
                }
                g[(i, j)] = s.clone();
                g[(j, i)] = s;
            }
        }
        g
    }

    pub fn killing_rank(&self) -> usize {
        crate::exact::rank(&self.killing_form())
    }

    /// `c_{ij}^k`
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        let mut r = Rational::zero();
        self.for_each_term(i, j, |kk, c| {
            if kk == k {
                r = c.clone();
            }
        });
        r
    }

    /// Replaces one stored structure constant; used to produce deliberately
    /// broken tables in tests and diagnostics. Parity closure is re-checked.
    pub fn perturbed(&self, i: usize, j: usize, k: usize, delta: &Rational) -> Result<Self> {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        let mut v = self.basis_bracket(a, b);
        v[k] += delta;
        let mut g = self.clone();
        g.table[tri(a, b)] = to_terms(&v);
        g.check_table()?;
        Ok(g)
    }

    /// Dense unit vector of the basis.
    pub fn unit(&self, i: usize) -> Vec<Rational> {
        vec_ops::unit(self.dim(), i)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.iter().all(|t| t.is_empty())
    }
}
