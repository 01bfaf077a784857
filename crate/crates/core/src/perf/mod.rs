//! The homotopy category `K^b(proj Λ)`: complexes, chain maps, cones, Hom
//! spaces, minimal models, cohomology, and catalogs of indecomposables.

pub mod complex;
pub mod graded;
pub mod hom;
pub mod minimal;
pub mod session;

pub use complex::{cocone, cone, ChainMap, PerfComplex, Triangle};
pub use graded::{cohomology, cohomology_at, decompose_minimal, iso_minimal};
pub use hom::{hom_basis, hom_dim as hom_perf, is_null_homotopic};
pub use minimal::{is_minimal, minimalize, Minimal};
pub use session::{DSum, Session, SiltCandidate, DEFAULT_PD_CAP};

use crate::algebra::{projective_resolution, Rep};
use crate::error::Result;

/// `M[shift]` via a minimal projective resolution of `M`.
///
/// Errors with [`crate::Error::PdCap`] when the projective dimension exceeds `cap`.
pub fn stalk(m: &Rep, shift: i32, cap: usize) -> Result<PerfComplex> {
    let res = projective_resolution(m, cap)?;
    let len = res.terms.len() as i32;
    if m.is_zero() {
        return Ok(PerfComplex::zero(&m.alg));
    }
    let terms: Vec<Vec<usize>> = res.terms.iter().rev().cloned().collect();
    let diffs = res.diffs.iter().rev().cloned().collect();
    Ok(PerfComplex::from_parts(m.alg.clone(), 1 - len, terms, diffs).shift(shift))
}
