//! Exact scalars, matrices and linear algebra.

pub mod linalg;
pub mod lp;
pub mod matrix;
pub mod poly;
pub mod posdef;
pub mod scalar;
pub mod sparse;

pub use linalg::{kernel, rank, solve, Echelon, IncrementalKernel, Solution};
pub use matrix::{vec_ops, CMatrix, Matrix, QMatrix};
pub use poly::{char_poly, char_poly_and_rational_split, CharPolySplit, Poly};
pub use posdef::{is_positive_definite, Definiteness};
pub use scalar::{rat, ratio, Rational, Scalar};
