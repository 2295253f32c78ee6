//! Subspaces in canonical echelon form and the bracket calculus on them.

use num_traits::Zero;

use super::space::Parity;
use super::structure::SuperAlgebra;
use crate::exact::linalg::{echelon_rows, Echelon, IncrementalKernel};
use crate::exact::{vec_ops, Rational};

/// A subspace of `K^n`, stored as its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ech: Echelon,
}

impl Subspace {
    pub fn span(n: usize, vectors: &[Vec<Rational>]) -> Self {
        Subspace { ech: echelon_rows(vectors, n) }
    }

    pub fn zero(n: usize) -> Self {
        Subspace::span(n, &[])
    }

    pub fn full(n: usize) -> Self {
        let b: Vec<Vec<Rational>> = (0..n).map(|i| vec_ops::unit(n, i)).collect();
        Subspace::span(n, &b)
    }

    /// Span of standard basis vectors.
    pub fn coordinate(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let b: Vec<Vec<Rational>> = indices.into_iter().map(|i| vec_ops::unit(n, i)).collect();
        Subspace::span(n, &b)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ech.cols
    }

    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis (reduced echelon rows).
    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.ech.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.ech.pivots
    }

    pub fn echelon(&self) -> &Echelon {
        &self.ech
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.ech.contains(v)
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        o.basis().iter().all(|v| self.contains(v))
    }

    /// Coordinates in the canonical basis.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        self.ech.coordinates(v)
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut b = self.basis().to_vec();
        b.extend_from_slice(o.basis());
        Subspace::span(self.ambient_dim(), &b)
    }

    pub fn sum_all<'a>(n: usize, spaces: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
        let mut b = Vec::new();
        for s in spaces {
            b.extend_from_slice(s.basis());
        }
        Subspace::span(n, &b)
    }

    pub fn intersection(&self, o: &Subspace) -> Subspace {
        let n = self.ambient_dim();
        if self.is_zero() || o.is_zero() {
            return Subspace::zero(n);
        }
        // x = Σ a_i u_i ∈ o  ⟺  reduce(Σ a_i u_i) against o vanishes
        let reduced: Vec<Vec<Rational>> = self.basis().iter().map(|u| o.ech.reduce(u)).collect();
        let k = self.dim();
        let mut inc = IncrementalKernel::new(k);
        let rows: Vec<Vec<Rational>> = (0..n).map(|c| (0..k).map(|i| reduced[i][c].clone()).collect()).collect();
        inc.constrain(&rows);
        let vs: Vec<Vec<Rational>> = inc.basis().iter().map(|a| vec_ops::combine(a, self.basis(), n)).collect();
        Subspace::span(n, &vs)
    }

    /// Standard basis indices spanning a complement (the non-pivot columns).
    pub fn complement_indices(&self) -> Vec<usize> {
        self.ech.free_columns()
    }

    /// Reduction of `v` modulo the subspace; zero exactly on the subspace.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        self.ech.reduce(v)
    }

    /// Intersection with the span of basis vectors of one parity.
    pub fn homogeneous_part(&self, g: &SuperAlgebra, p: Parity) -> Subspace {
        let n = self.ambient_dim();
        self.intersection(&Subspace::coordinate(n, g.space().indices_of(p)))
    }

    /// Graded iff it is the sum of its even and odd parts.
    pub fn is_graded(&self, g: &SuperAlgebra) -> bool {
        let e = self.homogeneous_part(g, Parity::Even);
        let o = self.homogeneous_part(g, Parity::Odd);
        e.dim() + o.dim() == self.dim()
    }

    /// Canonical basis split into parity-homogeneous vectors, even first.
    /// Only meaningful for graded subspaces.
    pub fn graded_basis(&self, g: &SuperAlgebra) -> Vec<Vec<Rational>> {
        let mut b = self.homogeneous_part(g, Parity::Even).basis().to_vec();
        b.extend_from_slice(self.homogeneous_part(g, Parity::Odd).basis());
        b
    }
}

impl SuperAlgebra {
    pub fn even_part(&self) -> Subspace {
        Subspace::coordinate(self.dim(), self.space().even_indices())
    }

    pub fn odd_part(&self) -> Subspace {
        Subspace::coordinate(self.dim(), self.space().odd_indices())
    }

    pub fn whole(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `[A, B]` as a subspace.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut out = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                let z = self.bracket_unchecked(x, y);
                if !vec_ops::is_zero(&z) {
                    out.push(z);
                }
            }
        }
        Subspace::span(self.dim(), &out)
    }

    /// `{x ∈ inside : [x, s] = 0 for all s ∈ s_space}`
    pub fn centralizer(&self, s_space: &Subspace, inside: &Subspace) -> Subspace {
        let n = self.dim();
        let u = inside.basis();
        let mut inc = IncrementalKernel::new(u.len());
        for s in s_space.basis() {
            let images: Vec<Vec<Rational>> = u.iter().map(|x| self.bracket_unchecked(x, s)).collect();
            let rows: Vec<Vec<Rational>> = (0..n)
                .map(|k| images.iter().map(|v| v[k].clone()).collect::<Vec<_>>())
                .filter(|r: &Vec<Rational>| r.iter().any(|c| !c.is_zero()))
                .collect();
            inc.constrain(&rows);
            if inc.dim() == 0 {
                break;
            }
        }
        let vs: Vec<Vec<Rational>> = inc.basis().iter().map(|a| vec_ops::combine(a, u, n)).collect();
        Subspace::span(n, &vs)
    }

    /// `z(g) = {x : [x, g] = 0}`
    pub fn center(&self) -> Subspace {
        self.centralizer(&self.whole(), &self.whole())
    }

    /// Center of the even part, `z(g₀)`, as a subspace of `g₀`.
    pub fn even_center(&self) -> Subspace {
        let g0 = self.even_part();
        self.centralizer(&g0, &g0)
    }

    /// `[g, g]`
    pub fn derived(&self) -> Subspace {
        let n = self.dim();
        let mut out = Vec::new();
        for ((_, _), t) in self.stored_brackets() {
            let mut v = vec_ops::zero(n);
            for (k, c) in t {
                v[*k] = c.clone();
            }
            out.push(v);
        }
        Subspace::span(n, &out)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().dim() == self.dim()
    }

    /// Smallest ideal containing `s`.
    pub fn ideal_closure(&self, s: &Subspace) -> Subspace {
        let mut cur = s.clone();
        loop {
            let next = cur.sum(&self.bracket_span(&self.whole(), &cur));
            if next.dim() == cur.dim() {
                return cur;
            }
            cur = next;
        }
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        (0..self.dim()).all(|i| s.basis().iter().all(|v| s.contains(&self.bracket_basis(i, v))))
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        let b = s.basis();
        (0..b.len()).all(|i| (i..b.len()).all(|j| s.contains(&self.bracket_unchecked(&b[i], &b[j]))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, &[vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)]]);
        let b = Subspace::span(3, &[vec![rat(1), rat(1), rat(1)], vec![rat(0), rat(1), rat(0)]]);
        let c = a.intersection(&b);
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&[rat(0), rat(1), rat(0)]));
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.complement_indices(), vec![2]);
    }

    #[test]
    fn zero_is_neutral() {
        let a = Subspace::span(2, &[vec![rat(1), rat(2)]]);
        assert_eq!(a.sum(&Subspace::zero(2)), a);
        assert!(a.intersection(&Subspace::zero(2)).is_zero());
    }
}
