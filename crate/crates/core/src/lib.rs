//! Silting theory over finite-dimensional path algebras.

pub mod algebra;
pub mod complete;
pub mod error;
pub mod exactla;
pub mod explore;
pub mod objspec;
pub mod perf;
pub mod silting;
pub mod tau;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/algebras.md")]
    pub mod algebras {}
    #[doc = include_str!("../../../book/src/complexes.md")]
    pub mod complexes {}
    #[doc = include_str!("../../../book/src/silting.md")]
    pub mod silting {}
    #[doc = include_str!("../../../book/src/completion.md")]
    pub mod completion {}
    #[doc = include_str!("../../../book/src/two_term.md")]
    pub mod two_term {}
    #[doc = include_str!("../../../book/src/example_a2.md")]
    pub mod example_a2 {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
