//! Exact computations with monadic descent and codescent.
//!
//! The crate works in three computable settings: modules over finitely
//! presented commutative ℤ-algebras, finite sets over a base, and diagrams on
//! finite categories. On top of them it builds cobar and bar constructions,
//! checks the Beck criteria, computes Amitsur cohomology and descent E2 terms,
//! and certifies contractions via extra (co)degeneracies.

pub mod algebra;
pub mod codescent;
pub mod descent;
pub mod error;
pub mod kan;
pub mod report;
pub mod simplicial;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/integer-algebra.md")]
    mod integer_algebra {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/cosimplicial.md")]
    mod cosimplicial {}
    #[doc = include_str!("../../../book/src/ring-descent.md")]
    mod ring_descent {}
    #[doc = include_str!("../../../book/src/finite-sets.md")]
    mod finite_sets {}
    #[doc = include_str!("../../../book/src/kan.md")]
    mod kan {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
