//! Gorenstein projective modules over bound quiver algebras, computed exactly.

pub mod ar;
pub mod classify;
pub mod error;
pub mod fixtures;
pub mod gorenstein;
pub mod linalg;
pub mod modules;
pub mod quiver;
pub mod tilting;

pub use error::{Error, Result};
