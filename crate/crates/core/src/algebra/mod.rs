//! Graded spaces, Lie superalgebras as structure constants, and the
//! constructions built on them.

pub mod block;
pub mod combinators;
pub mod forms;
pub mod module;
pub mod serial;
pub mod space;
pub mod structure;
pub mod subspace;

pub use block::{from_matrix_span, BlockMatrix, MatrixRealization};
pub use combinators::{
    central_extension, check_derivation, direct_sum, direct_sum_all, is_trivial_cocycle, quotient_by_central,
    quotient_by_ideal, semidirect_by_derivation, subalgebra, CoordinateBasis, DirectSum, Quotient, Subalgebra,
};
pub use forms::{check_invariant_form, invariant_forms, InvariantForm};
pub use space::{Parity, SuperSpace};
pub use structure::{SuperAlgebra, Terms};
pub use subspace::Subspace;
