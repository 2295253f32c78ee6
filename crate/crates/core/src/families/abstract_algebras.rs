//! Families given directly by structure constants: Clifford–Heisenberg
//! algebras and tangent superalgebras of compact simple Lie algebras.

use num_traits::Zero;

use crate::algebra::combinators::{central_extension, semidirect_by_derivation};
use crate::algebra::forms::killing_restricted;
use crate::algebra::{Parity, SuperAlgebra, SuperSpace};
use crate::exact::{rat, vec_ops, QMatrix, Rational};
use crate::Result;

/// Clifford–Heisenberg algebra with one central even vector `c` and
/// `[x_a, x_b] = gram_ab · c`.
pub fn clifford_heisenberg(name: &str, gram: &QMatrix) -> Result<SuperAlgebra> {
    let d = gram.rows();
    let mut labels = vec!["c".to_string()];
    labels.extend((0..d).map(|k| format!("x{k}")));
    let mut parities = vec![Parity::Even];
    parities.extend(std::iter::repeat_n(Parity::Odd, d));
    let space = SuperSpace::new(labels, parities)?;
    let n = d + 1;
    let mut brackets = Vec::new();
    for a in 0..d {
        for b in a..d {
            if !gram[(a, b)].is_zero() {
                let mut v = vec_ops::zero(n);
                v[0] = gram[(a, b)].clone();
                brackets.push(((a + 1, b + 1), v));
            }
        }
    }
    SuperAlgebra::from_brackets(name, space, brackets)
}

/// Real form `h = {(iz, v, −iv)}` of the complex Clifford–Heisenberg algebra
/// of `C^v`. With `c = (i, 0, 0)` and the real basis `(e_k, i·e_k)` of `V`,
/// `[X, X] = 2‖v‖²·c`.
pub fn spin_h(v: usize) -> Result<SuperAlgebra> {
    let gram = QMatrix::identity(2 * v).scale(&rat(2));
    clifford_heisenberg(&format!("spin_h({v})"), &gram)
}

/// Multiplication by `i` on `V`: `x_k ↦ y_k`, `y_k ↦ −x_k`, where the odd
/// basis is `(x_0, y_0, x_1, y_1, …)` with `y_k = i·x_k`.
pub fn complex_structure(v: usize) -> QMatrix {
    let n = 2 * v + 1;
    let mut d = QMatrix::zeros(n, n);
    for k in 0..v {
        let (x, y) = (1 + 2 * k, 2 + 2 * k);
        d[(y, x)] = rat(1);
        d[(x, y)] = rat(-1);
    }
    d
}

/// `ĥ = h ⋊_D R` with `D(iz, v, −iv) = (0, iv, v)`.
pub fn spin_h_hat(v: usize) -> Result<SuperAlgebra> {
    let h = spin_h(v)?;
    let g = semidirect_by_derivation(&h, &complex_structure(v), Parity::Even, "d")?;
    Ok(g.with_name(format!("spin_h^({v})")))
}

/// Clifford–Heisenberg algebra with a form of signature `(r, s)`.
pub fn ch_indefinite(r: usize, s: usize) -> Result<SuperAlgebra> {
    let diag: Vec<Rational> = (0..r + s).map(|k| if k < r { rat(2) } else { rat(-2) }).collect();
    clifford_heisenberg(&format!("ch({r},{s})"), &QMatrix::diag(&diag))
}

/// The complex Clifford–Heisenberg algebra `C ⊕ V ⊕ V̄` viewed as a real
/// algebra. Basis: `1, i` (even), then `v_k, i·v_k, w_k, i·w_k` (odd) with
/// `[v_k, w_k] = 1`.
pub fn ch_complex(v: usize) -> Result<SuperAlgebra> {
    let mut labels = vec!["1".to_string(), "i".to_string()];
    for k in 0..v {
        labels.extend([format!("v{k}"), format!("iv{k}"), format!("w{k}"), format!("iw{k}")]);
    }
    let n = labels.len();
    let mut parities = vec![Parity::Even; 2];
    parities.extend(std::iter::repeat_n(Parity::Odd, 4 * v));
    let space = SuperSpace::new(labels, parities)?;
    let mut brackets = Vec::new();
    for k in 0..v {
        let base = 2 + 4 * k;
        let (vk, ivk, wk, iwk) = (base, base + 1, base + 2, base + 3);
        let mk = |re: i64, im: i64| {
            let mut x = vec_ops::zero(n);
            x[0] = rat(re);
            x[1] = rat(im);
            x
        };
        brackets.push(((vk, wk), mk(1, 0)));
        brackets.push(((vk, iwk), mk(0, 1)));
        brackets.push(((ivk, wk), mk(0, 1)));
        brackets.push(((ivk, iwk), mk(-1, 0)));
    }
    SuperAlgebra::from_brackets(format!("ch(C^{v})"), space, brackets)
}

/// `T k = k ⊗ Λ₁`: even `k ⊗ 1`, odd `k ⊗ ξ`, odd brackets zero.
pub fn tangent(k: &SuperAlgebra) -> Result<SuperAlgebra> {
    let d = k.dim();
    let mut labels: Vec<String> = (0..d).map(|i| k.space().label(i).to_string()).collect();
    labels.extend((0..d).map(|i| format!("{}.xi", k.space().label(i))));
    let mut parities = vec![Parity::Even; d];
    parities.extend(std::iter::repeat_n(Parity::Odd, d));
    let space = SuperSpace::new(labels, parities)?;
    let mut brackets = Vec::new();
    for ((i, j), t) in k.stored_brackets() {
        let mut even = vec_ops::zero(2 * d);
        let mut odd = vec_ops::zero(2 * d);
        for (l, c) in t {
            even[*l] = c.clone();
            odd[d + *l] = c.clone();
        }
        brackets.push(((i, j), even));
        brackets.push(((i, d + j), odd.clone()));
        if i != j {
            // [x_j ⊗ 1, x_i ⊗ ξ] = −[x_i, x_j] ⊗ ξ
            brackets.push(((j, d + i), vec_ops::neg(&odd)));
        }
    }
    SuperAlgebra::from_brackets(format!("T{}", k.name()), space, brackets)
}

/// `∂/∂ξ` on `T k`: `x ⊗ ξ ↦ x ⊗ 1`.
pub fn d_xi(d: usize) -> QMatrix {
    let mut m = QMatrix::zeros(2 * d, 2 * d);
    for i in 0..d {
        m[(i, d + i)] = rat(1);
    }
    m
}

/// `T̂k = T k ⋊ R·∂/∂ξ`.
pub fn tangent_hat(k: &SuperAlgebra) -> Result<SuperAlgebra> {
    let t = tangent(k)?;
    let g = semidirect_by_derivation(&t, &d_xi(k.dim()), Parity::Odd, "D")?;
    Ok(g.with_name(format!("T^{}", k.name())))
}

/// `T̃k`: central extension of `T k` by `β = −κ_k` on `k ⊗ ξ`.
pub fn tangent_tilde(k: &SuperAlgebra) -> Result<SuperAlgebra> {
    let t = tangent(k)?;
    let beta = killing_restricted(k, Parity::Even).scale(&rat(-1));
    let g = central_extension(&t, &beta, "c")?;
    Ok(g.with_name(format!("T~{}", k.name())))
}
