//! Finite-dimensional right modules given as quiver representations.

mod cover;
mod decompose;
mod graded;
mod hom;
mod io;
mod rep;
mod standard;

pub use cover::{
    presentation, projective_cover, projective_dimension, projective_sum, radical, random_module, resolution, sum_basis, syzygy,
    syzygy_power, top_dims, top_generators, is_projective, Presentation, ProjMap,
};
pub use decompose::{decompose, is_isomorphic, local_radical, Decomposition, Summand};
pub use graded::*;
pub use io::ModuleFile;
pub use hom::{hom_dim, hom_space, hom_space_direct, hom_space_masked};
pub use rep::{check_representation, cokernel_module, combine, direct_sum, kernel_module, ModuleMap, Representation};
pub use standard::{
    dualize, gp_cosyzygy_unchecked, regular_module, restrict_to_base, simple, standard_module, star_dual, transpose_tr,
    ModuleKind,
};
