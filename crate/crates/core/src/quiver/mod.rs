//! Bound quiver presentations and the algebras they define.

mod algebra;
mod constructions;
mod grading;
mod groebner;
mod presentation;

pub use algebra::{Algebra, BasisPath, BoundQuiverAlgebra, Sparse, DEFAULT_PATH_CAP};
pub use constructions::{
    build_lambda_k, build_triangular, lambda_k_shape, linear_quiver, presentations_isomorphic, tensor_presentation,
    truncated_polynomial, LambdaKShape,
};
pub use grading::{gorenstein_parameter, socle_degrees, GorensteinParameter};
pub use presentation::{parse_quiver_spec, AlgebraPresentation, Arrow, Quiver, Relation};

use crate::error::Result;
use crate::linalg::Field;

/// Build the multiplication table of a presentation.
pub fn build_algebra_table<F: Field>(field: &F, p: &AlgebraPresentation) -> Result<Algebra<F>> {
    BoundQuiverAlgebra::build(field, p)
}

/// The opposite algebra.
pub fn opposite_algebra<F: Field>(a: &Algebra<F>) -> Algebra<F> {
    a.opposite()
}
