//! Exact rational linear programming by the simplex method (Bland's rule).

use num_traits::{Signed, Zero};

use super::scalar::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpResult {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// objective = obj_const + Σ obj[j]·x_j over the current nonbasic variables
    obj: Vec<Rational>,
    obj_const: Rational,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v /= &p;
        }
        self.rhs[r] /= &p;
        let prow = self.rows[r].clone();
        let prhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (x, y) in self.obj.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.obj_const += &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Runs to optimality; `false` if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        loop {
            let Some(c) = (0..allowed).find(|&j| self.obj[j].is_positive()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                if self.rows[i][c].is_positive() {
                    let ratio = &self.rhs[i] / &self.rows[i][c];
                    let better = match &best {
                        None => true,
                        Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                    };
                    if better {
                        best = Some((i, ratio));
                    }
                }
            }
            let Some((r, _)) = best else {
                return false;
            };
            self.pivot(r, c);
        }
    }

    fn set_objective(&mut self, cost: &[Rational]) {
        let width = self.obj.len();
        self.obj = (0..width).map(|j| cost.get(j).cloned().unwrap_or_else(Rational::zero)).collect();
        self.obj_const = Rational::zero();
        for i in 0..self.rows.len() {
            let b = self.basis[i];
            if self.obj[b].is_zero() {
                continue;
            }
            let f = self.obj[b].clone();
            for (x, y) in self.obj.iter_mut().zip(&self.rows[i]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            self.obj_const += &f * &self.rhs[i];
        }
    }
}

/// Maximizes `c·x` subject to `a x ≤ b`, `x ≥ 0`.
pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpResult {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m, "dimension mismatch");
    // columns: x (n), slacks (m), artificial (1)
    let art = n + m;
    let width = n + m + 1;
    let rows: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n, "dimension mismatch");
            let mut r = row.clone();
            r.extend((0..m).map(|k| if k == i { Rational::from_integer(1.into()) } else { Rational::zero() }));
            r.push(Rational::from_integer((-1).into()));
            r
        })
        .collect();
    let mut t = Tableau {
        rows,
        rhs: b.to_vec(),
        basis: (n..n + m).collect(),
        obj: vec![Rational::zero(); width],
        obj_const: Rational::zero(),
    };
    let worst = (0..m).filter(|&i| t.rhs[i].is_negative()).min_by(|&i, &j| t.rhs[i].cmp(&t.rhs[j]));
    if let Some(r) = worst {
        let mut cost = vec![Rational::zero(); width];
        cost[art] = Rational::from_integer((-1).into());
        t.set_objective(&cost);
        t.pivot(r, art);
        let bounded = t.optimize(width);
        debug_assert!(bounded);
        if t.obj_const.is_negative() {
            return LpResult::Infeasible;
        }
        if let Some(r) = t.basis.iter().position(|&v| v == art) {
            if let Some(c) = (0..art).find(|&j| !t.rows[r][j].is_zero()) {
                t.pivot(r, c);
            }
        }
    }
    for row in t.rows.iter_mut() {
        row[art] = Rational::zero();
    }
    t.set_objective(c);
    if !t.optimize(art) {
        return LpResult::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &v) in t.basis.iter().enumerate() {
        if v < n {
            x[v] = t.rhs[i].clone();
        }
    }
    let value = c.iter().zip(&x).fold(Rational::zero(), |acc, (p, q)| acc + p * q);
    LpResult::Optimal { x, value }
}
