//! Exact linear algebra over Q and prime fields.

pub mod factor;
pub mod mat;
pub mod poly;
pub mod scalar;

pub use mat::{Mat, Rref};
pub use scalar::{Field, Rat, Scalar};
