//! Exact linear algebra over prime fields and the rationals.

mod field;
mod matrix;
pub mod poly;
mod subspace;

pub use field::{is_prime, Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{kronecker, rref_rank_kernel, solve_linear, Matrix, Rref, SolutionSet};
pub use subspace::{RelativeBasis, Subspace};
