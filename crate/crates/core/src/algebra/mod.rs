//! Finite-dimensional path algebras of bound quivers and their modules.

pub mod decompose;
pub mod diagram;
pub mod dsl;
pub mod elem;
pub mod homological;
pub mod quiver;
pub mod rep;

pub use diagram::{Diagram, Morph, DEFAULT_SEED};
pub use dsl::{parse_algebra, print_algebra};
pub use elem::{Elem, PathMatrix};
pub use homological::{
    ar_translate, ar_translate_inv, euler_form, ext1, knitted_indecomposables, min_proj_presentation,
    projective_cover, projective_resolution, Knit, Presentation, Resolution,
};
pub use quiver::{Arrow, Path, PathAlgebra, Quiver};
pub use rep::{decompose, hom_dim, hom_modules, injective, iso_modules, projective, simple, Rep, RepMap};
